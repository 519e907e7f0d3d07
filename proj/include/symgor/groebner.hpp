#pragma once

#include <optional>
#include <span>
#include <vector>

#include "symgor/execution.hpp"
#include "symgor/monomial_ideal.hpp"
#include "symgor/polynomial.hpp"

namespace symgor {

/// lcm/LT(f) * f - lcm/LT(g) * g, where LT includes the coefficient.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct GroebnerOptions {
  /// Skip a pair (i, j) when some third leading monomial divides lcm(i, j)
  /// and both partner lcms are proper divisors of it.
  bool chain_criterion = false;
  Execution exec = Execution::Parallel;
};

struct GroebnerFailure {
  std::size_t first = 0;
  std::size_t second = 0;
  Polynomial normal_form;
};

struct GroebnerReport {
  std::size_t generators = 0;
  std::size_t pairs_total = 0;
  std::size_t pairs_pruned = 0;         // coprime leading monomials
  std::size_t pairs_chain_skipped = 0;  // only with chain_criterion
  std::size_t pairs_reduced = 0;        // reduced to zero
  bool pass = false;
  std::optional<GroebnerFailure> failure;  // lowest failing pair index
  double elapsed_ms = 0.0;
};

/// Buchberger's criterion on a fixed generating set: pass iff every pair not
/// pruned reduces to zero under poly_reduce against the full list. Rejects
/// empty input, zero generators and inhomogeneous generators with
/// std::invalid_argument.
GroebnerReport verify_groebner(std::span<const Polynomial> gens, const GroebnerOptions& options = {});

/// Minimalized ideal of leading monomials. Meaningful as the initial ideal
/// only once verify_groebner has passed on the same list.
MonomialIdeal initial_ideal(std::span<const Polynomial> gens);

/// True iff every probe is divisible by the leading monomial of some
/// generator, i.e. the probes lie in the ideal generated by the leading
/// monomials.
bool ideal_contains_monomials(std::span<const Polynomial> gens, std::span<const Monomial> probes);

}  // namespace symgor
