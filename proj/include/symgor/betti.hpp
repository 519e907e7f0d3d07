#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symgor/complexes.hpp"
#include "symgor/execution.hpp"
#include "symgor/monomial_ideal.hpp"

namespace symgor {

struct InvariantReport {
  long long dim = 0;
  mpz_class multiplicity;
  long long regularity = 0;
  long long a_invariant = 0;
  bool gorenstein = false;
};

/// Closed forms for the quotient by the t-minors of the generic symmetric
/// n x n matrix: Krull dimension, multiplicity, Castelnuovo-Mumford
/// regularity and a-invariant, branching on the parity of n - t.
/// Requires 2 <= t <= n.
InvariantReport determinantal_invariants(int n, int t);

struct CompressedProfile {
  std::vector<long long> h;  // h_0 .. h_{2s}
  long long multiplicity_bound = 0;
};

/// Maximal h-vector of a Gorenstein algebra of codimension c and
/// regularity 2s: h_i = C(c-1+i, c-1) for i <= s, mirrored. Requires c >= 1,
/// s >= 0.
CompressedProfile compressed_profile(int c, int s);

/// Graded Betti numbers beta_{i,j} of a quotient ring; zero entries are not
/// stored.
class BettiTable {
 public:
  long long get(int i, int j) const;
  void add(int i, int j, long long value);
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

  /// max(j - i) over nonzero entries.
  int regularity() const;
  /// Exactly one internal degree per homological index.
  bool is_pure() const;
  int projective_dimension() const;

  /// {"i,j": rank, ...} with keys in (i, j) order.
  std::string to_json() const;
  /// Macaulay2-style staircase: column i, row j - i.
  std::string to_text() const;

  bool operator==(const BettiTable&) const = default;

 private:
  std::map<std::pair<int, int>, long long> entries_;
};

/// Pure Gorenstein table of the quotient by the (n-2)-minors: beta_{0,0} =
/// beta_{6,2n} = 1, the three displayed values at (i, n-3+i) for i = 1,2,3
/// and their mirrors at (6-i, n+3-i). Throws std::domain_error if an
/// expression fails to be an integer. Requires n >= 5.
BettiTable closed_form_betti(int n);

class SupportTooLarge : public std::length_error {
 public:
  explicit SupportTooLarge(std::size_t size);
  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
};

struct HochsterOptions {
  std::size_t max_support = 14;
  /// 0 for exact rational ranks; otherwise a prime for modular ranks.
  std::uint32_t modulus = 0;
  Execution exec = Execution::Parallel;
};

/// beta_{i,j}(K[x]/I) = sum over j-subsets W of the support of
/// rank H̃_{j-i-1}(Δ_W), with Δ the complex of the square-free ideal I.
/// Cone points are skipped since they do not contribute.
BettiTable hochster_betti(const MonomialIdeal& ideal, const HochsterOptions& options = {});

/// Regularity of a Cohen-Macaulay Stanley-Reisner quotient: the degree of
/// its h-polynomial.
int h_polynomial_degree(const std::vector<long long>& h);

}  // namespace symgor
