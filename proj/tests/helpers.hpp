#pragma once

#include <memory>
#include <random>
#include <vector>

#include "symgor/polynomial.hpp"
#include "symgor/term_order.hpp"

namespace testing {

inline symgor::Polynomial::OrderPtr order_for(int n) {
  return std::make_shared<const symgor::TermOrder>(symgor::make_term_order(n));
}

inline symgor::Polynomial var(const symgor::Polynomial::OrderPtr& o, int i, int j) {
  return symgor::Polynomial::variable(o, symgor::Variable(i, j));
}

inline symgor::Monomial mono(const symgor::TermOrder& o, std::vector<symgor::Variable> f) { return o.monomial(f); }

inline symgor::Monomial random_monomial(std::mt19937& rng, std::size_t nvars, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> slot(0, nvars - 1);
  symgor::Monomial m;
  for (unsigned d = deg(rng); d > 0; --d) m *= symgor::Monomial::variable(slot(rng));
  return m;
}

inline symgor::Polynomial random_polynomial(std::mt19937& rng, const symgor::Polynomial::OrderPtr& o,
                                            std::size_t terms, unsigned max_degree) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<symgor::Term> ts;
  for (std::size_t i = 0; i < terms; ++i) {
    ts.push_back({random_monomial(rng, o->num_variables(), max_degree), symgor::Rational(coeff(rng))});
  }
  return symgor::Polynomial(o, std::move(ts));
}

}  // namespace testing
