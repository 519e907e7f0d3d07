#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "symgor/monomial.hpp"
#include "symgor/term_order.hpp"

namespace symgor {

using Rational = mpq_class;

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial with exact rational coefficients in the ring of a
/// TermOrder. Terms are kept sorted strictly descending under the order
/// with no zero coefficients, so the leading term is always terms().front().
class Polynomial {
 public:
  using OrderPtr = std::shared_ptr<const TermOrder>;

  explicit Polynomial(OrderPtr order);
  /// Accepts terms in any order; like monomials are combined, zeros dropped.
  Polynomial(OrderPtr order, std::vector<Term> terms);

  static Polynomial variable(OrderPtr order, Variable v);
  static Polynomial constant(OrderPtr order, const Rational& c);

  const TermOrder& order() const { return *order_; }
  const OrderPtr& order_ptr() const { return order_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Throws std::domain_error on the zero polynomial.
  const Term& leading_term() const;
  bool is_homogeneous() const;
  /// Largest total degree of a term; 0 for the zero polynomial.
  unsigned degree() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  /// coeff * m * (*this).
  Polynomial mul_term(const Monomial& m, const Rational& coeff) const;

  bool operator==(const Polynomial& other) const;

  /// "x[1][1]·x[2][2] − x[1][2]^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  friend Polynomial poly_reduce(const Polynomial&, std::span<const Polynomial>);
  static Polynomial from_sorted(OrderPtr order, std::vector<Term> terms);
  void check_ring(const Polynomial& other) const;

  OrderPtr order_;
  std::vector<Term> terms_;
};

/// The maximal monomial of p with its coefficient. Throws on p = 0.
Term leading_term(const Polynomial& p);

/// Full normal form of p modulo `basis`: repeatedly cancels the largest
/// reducible term using the first basis element (in list order) whose leading
/// monomial divides it. No term of the result is divisible by a basis leading
/// monomial. Zero basis elements are rejected.
Polynomial poly_reduce(const Polynomial& p, std::span<const Polynomial> basis);

std::string format_rational(const Rational& c);

}  // namespace symgor
