#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "symgor/monomial.hpp"

namespace symgor {

enum class VariableClass { Diagonal, Band, Other };

/// Entry x_{row,col} of the generic symmetric matrix, stored with row <= col.
struct Variable {
  int row = 1;
  int col = 1;

  Variable() = default;
  /// Normalizes so that row <= col (x_{ji} is x_{ij}).
  Variable(int i, int j) : row(i <= j ? i : j), col(i <= j ? j : i) {}

  auto operator<=>(const Variable&) const = default;
  std::string name() const;
};

/// Diagonal iff row == col; Band iff col == row + 2 or the entry is x_{12}
/// or x_{n-1,n}; Other otherwise.
VariableClass classify(Variable v, int n);

/// Graded reverse lexicographic order on the entries of a symmetric n x n
/// matrix with an explicit variable priority. Monomials built for this order
/// use priority ranks as their slots, so slot 0 is the most important
/// variable and revlex_compare realizes the order directly.
class TermOrder {
 public:
  /// `priority` must list every entry x_{ij}, i <= j, exactly once.
  TermOrder(int n, std::vector<Variable> priority);

  int n() const { return n_; }
  std::size_t num_variables() const { return priority_.size(); }
  const std::vector<Variable>& priority() const { return priority_; }
  const Variable& variable(std::size_t rank) const { return priority_[rank]; }
  std::size_t rank(Variable v) const;

  Monomial monomial(const std::vector<Variable>& factors) const;
  std::vector<Variable> factors(const Monomial& m) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return revlex_compare(a, b);
  }

  /// "x[1][1]·x[2][2]^2", factors listed by priority; "1" for the unit.
  std::string format(const Monomial& m) const;

  bool operator==(const TermOrder& other) const {
    return n_ == other.n_ && priority_ == other.priority_;
  }

 private:
  int n_;
  std::vector<Variable> priority_;
  std::vector<int> rank_table_;  // n*n, row-major on 0-based (row, col)
};

/// Diagonal entries x11 > ... > xnn, then x13 > x24 > ... > x_{n-2,n} > x12 >
/// x_{n-1,n}, then every remaining entry with priority decreasing along the
/// lexicographic order of (row, col), so x14 > x15 > x23 > ... Rejects n < 4
/// and n > 10.
TermOrder make_term_order(int n);

/// Same head as make_term_order with a caller-chosen ordering of the Other
/// entries. `tail` must be a permutation of exactly those entries.
TermOrder make_term_order(int n, const std::vector<Variable>& tail);

/// The set D of diagonal entries, in priority order.
std::vector<Variable> diagonal_variables(int n);
/// The band set U in priority order: x13, ..., x_{n-2,n}, x12, x_{n-1,n}.
std::vector<Variable> band_variables(int n);
/// Other entries in the default tail order (lexicographic by (row, col)).
std::vector<Variable> other_variables(int n);

}  // namespace symgor
