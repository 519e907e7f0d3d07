#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "symgor/execution.hpp"
#include "symgor/polynomial.hpp"

namespace symgor {

/// Minor [rows|cols] of the generic symmetric matrix in canonical form:
/// both sequences strictly increasing and rows <= cols lexicographically
/// ([R|C] and [C|R] are transposes of each other, hence equal).
struct MinorSpec {
  int n = 0;
  std::vector<int> rows;
  std::vector<int> cols;

  std::size_t size() const { return rows.size(); }
  std::string to_string() const;
  auto operator<=>(const MinorSpec&) const = default;
};

/// Validates and canonicalizes; throws std::invalid_argument on unsorted,
/// repeated or out-of-range indices or mismatched lengths.
MinorSpec make_minor_spec(int n, std::vector<int> rows, std::vector<int> cols);

struct IndexSequences {
  std::vector<int> rows;
  std::vector<int> cols;
  bool operator==(const IndexSequences&) const = default;
};

/// Recursive Laplace expansion along the first row, memoized on the
/// canonical (row set, column set) pair. This is the serial reference path;
/// one evaluator may be reused for many minors of the same order.
class MinorEvaluator {
 public:
  explicit MinorEvaluator(Polynomial::OrderPtr order);

  /// Determinant of the submatrix on sorted row/column index sets.
  const Polynomial& minor(const MinorSpec& spec);
  /// Determinant with rows and columns taken in the given (possibly
  /// permuted) order; the sign of the permutation pair is applied.
  Polynomial minor(const std::vector<int>& rows, const std::vector<int>& cols);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  const Polynomial& minor_masks(std::uint32_t rows, std::uint32_t cols);

  Polynomial::OrderPtr order_;
  std::unordered_map<std::uint64_t, Polynomial> cache_;
};

Polynomial minor_polynomial(const Polynomial::OrderPtr& order, const std::vector<int>& rows,
                            const std::vector<int>& cols);
Polynomial minor_polynomial(const Polynomial::OrderPtr& order, const MinorSpec& spec);

struct MinorEntry {
  MinorSpec spec;
  Polynomial poly;
};

/// Number of canonical t-minors of an n x n symmetric matrix.
std::size_t minor_count(int n, int t);

/// Every canonical t-minor, sorted by spec. Parallel execution fills a
/// table of all k-minors level by level (k = 1..t, one OpenMP loop per
/// level); serial execution uses MinorEvaluator. Rejects t outside [2, n].
std::vector<MinorEntry> all_minors(const Polynomial::OrderPtr& order, int t,
                                   Execution exec = Execution::Parallel);

/// Leading term of every canonical s-minor for s = 1..max_size, passed level
/// by level to `visit(s, spec, leading term)` in sorted spec order.
void scan_minor_leading_terms(const Polynomial::OrderPtr& order, int max_size,
                              const std::function<void(int, const MinorSpec&, const Term&)>& visit,
                              Execution exec = Execution::Parallel);

enum class Parity { Odd, Even };

/// Index sequences for the staircase minors starting at the top-left corner:
/// a = 1, 3, 2, 5, 4, ... and b = 2, 1, 4, 3, 6, ..., of length 2*ell+1
/// (Odd) or 2*ell (Even). Requires ell >= 1.
IndexSequences special_indices_low(int ell, Parity parity);

/// Mirror image at the bottom-right corner of an n x n matrix, ending with
/// row n-1 and column n. Requires ell >= 1 and all indices within [1, n].
IndexSequences special_indices_high(int ell, Parity parity, int n);

/// Product of the band entries the staircase minors are expected to lead
/// with: x12 x13 x24 ... for the low family and ... x_{n-2,n} x_{n-1,n} for
/// the high family, with as many factors as the minor has rows.
std::vector<Variable> staircase_leading_factors_low(std::size_t size);
std::vector<Variable> staircase_leading_factors_high(std::size_t size, int n);

/// Square-free degree-s monomials on D and U such that no diagonal factor
/// x_ii shares an index with a band factor. Sorted descending in the order.
std::vector<Monomial> initmon_candidates(const TermOrder& order, int s);

struct BandMonomialWitness {
  Monomial monomial;
  MinorSpec minor;
};

enum class WitnessStrategy { ExhaustiveScan, Constructive };

/// Raised when a candidate monomial has no witnessing minor.
class CounterexampleError : public std::runtime_error {
 public:
  CounterexampleError(const std::string& what, std::vector<std::string> payload)
      : std::runtime_error(what), payload_(std::move(payload)) {}
  const std::vector<std::string>& payload() const { return payload_; }

 private:
  std::vector<std::string> payload_;
};

/// Builds the rows/columns of an s-minor whose leading term should be the
/// given candidate monomial, following the staircase decomposition of its
/// band part and bordering with the diagonal indices. Returns nullopt when
/// the monomial is not a candidate.
std::optional<IndexSequences> constructive_witness(int n, const std::vector<Variable>& factors);

/// All variants of that construction obtained by transposing blocks of the
/// band part (the two chains and each remaining entry); the first entry is
/// constructive_witness itself. The plain recipe does not always lead with
/// the candidate once diagonal indices are bordered on (x33·x12·x45 at
/// n = 5 is an example), so callers try the variants in turn. Empty when
/// the monomial is not a candidate.
std::vector<IndexSequences> constructive_witnesses(int n, const std::vector<Variable>& factors);

/// For every candidate of initmon_candidates(order, s), an s-minor whose
/// leading term is that candidate. The scan takes the first such minor in
/// spec order; the constructive strategy builds one and checks it by direct
/// computation. Throws CounterexampleError listing any candidate left
/// without a witness. Requires 1 <= s <= n-2.
std::vector<BandMonomialWitness> witness_leading_terms(const Polynomial::OrderPtr& order, int s,
                                                       WitnessStrategy strategy = WitnessStrategy::ExhaustiveScan,
                                                       Execution exec = Execution::Parallel);

/// "rows=1,2,3; cols=1,2,4; lt=x[1][1]·...; lc=1" line for CLI dumps.
std::string format_minor_line(const MinorEntry& entry);

}  // namespace symgor
