#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symgor/betti.hpp"
#include "symgor/execution.hpp"
#include "symgor/groebner.hpp"
#include "symgor/term_order.hpp"

namespace symgor {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
  std::vector<std::string> counterexample;
  double elapsed_ms = 0.0;
};

struct LemmaResult {
  std::string name;
  std::size_t instances = 0;
  std::vector<std::string> counterexamples;
  /// Constructive check only: instances where the plain recipe missed and a
  /// transposed variant was needed.
  std::size_t fallbacks = 0;
  bool pass() const { return counterexamples.empty(); }
};

/// Exhaustive instantiation of the leading-term claims at matrix size n:
/// band sequences, the two staircase families, the candidate monomials of
/// every degree 1..n-2 (by scan and by construction) and unit leading
/// coefficients of the (n-2)-minors. Requires 4 <= n <= 10.
std::vector<LemmaResult> lemma_suite(const Polynomial::OrderPtr& order, Execution exec = Execution::Parallel);
std::vector<LemmaResult> lemma_suite(int n, Execution exec = Execution::Parallel);

struct VerifyOptions {
  bool force_gb = false;
  bool force_betti = false;
  bool skip_betti = false;
  bool chain_criterion = false;
  bool skip_lemmas = false;
  Execution exec = Execution::Parallel;
  /// Other-variable ordering; empty means the default tail.
  std::vector<Variable> tail;
};

struct VerificationCounts {
  std::size_t minors = 0;
  std::size_t initial_gens = 0;
  std::size_t facets = 0;
  std::size_t cone_points = 0;
};

struct VerificationReport {
  int n = 0;
  std::vector<CheckResult> checks;
  VerificationCounts counts;
  std::string groebner_route;  // "buchberger", "inclusion" or "skipped"
  std::optional<GroebnerReport> groebner;
  std::optional<BettiTable> betti;
  std::optional<MonomialIdeal> initial;
  std::vector<Variable> cycle_labeling;
  InvariantReport invariants;
  std::vector<long long> h_vector;
  std::vector<LemmaResult> lemmas;
  double elapsed_ms = 0.0;

  bool pass() const;
  const CheckResult* check(const std::string& name) const;
};

/// Full check pipeline at matrix size n >= 5 (std::invalid_argument below).
/// n <= 6 runs everything; n = 7 replaces Buchberger by the inclusion
/// certificate and skips Hochster unless forced; n >= 8 keeps only the
/// closed forms and the combinatorics unless force_gb is set.
VerificationReport run_verification(int n, const VerifyOptions& options = {});

std::string to_string(CheckStatus status);

}  // namespace symgor
