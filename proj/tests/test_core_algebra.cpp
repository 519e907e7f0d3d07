#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace symgor;
using testing::order_for;
using testing::var;

namespace {

// Direct reading of the definition: compare degrees, then find the last
// nonzero entry of a - b in priority order.
int naive_compare(const Monomial& a, const Monomial& b, std::size_t nvars) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t s = nvars; s-- > 0;) {
    const int d = static_cast<int>(a.exponent(s)) - static_cast<int>(b.exponent(s));
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int sign(std::strong_ordering o) { return o > 0 ? 1 : (o < 0 ? -1 : 0); }

}  // namespace

TEST_CASE("variable classes") {
  CHECK(classify(Variable(3, 3), 5) == VariableClass::Diagonal);
  CHECK(classify(Variable(1, 2), 5) == VariableClass::Band);
  CHECK(classify(Variable(4, 5), 5) == VariableClass::Band);
  CHECK(classify(Variable(2, 4), 5) == VariableClass::Band);
  CHECK(classify(Variable(2, 3), 5) == VariableClass::Other);
  CHECK(classify(Variable(1, 4), 5) == VariableClass::Other);
  CHECK(Variable(4, 2) == Variable(2, 4));
  CHECK(Variable(4, 2).row == 2);
}

TEST_CASE("priority head for n = 5") {
  const TermOrder o = make_term_order(5);
  const std::vector<Variable> head = {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {1, 3}, {2, 4}, {3, 5}, {1, 2}, {4, 5}};
  for (std::size_t i = 0; i < head.size(); ++i) CHECK(o.variable(i) == head[i]);
  CHECK(o.num_variables() == 15);
  CHECK(o.rank(Variable(1, 4)) < o.rank(Variable(1, 5)));
  CHECK(o.rank(Variable(1, 5)) < o.rank(Variable(2, 3)));
}

TEST_CASE("priority head for n = 4") {
  const TermOrder o = make_term_order(4);
  const std::vector<Variable> head = {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {1, 3}, {2, 4}, {1, 2}, {3, 4}};
  for (std::size_t i = 0; i < head.size(); ++i) CHECK(o.variable(i) == head[i]);
  CHECK(band_variables(4) == std::vector<Variable>{{1, 3}, {2, 4}, {1, 2}, {3, 4}});
}

TEST_CASE("term order rejects bad sizes and tails") {
  CHECK_THROWS_AS(make_term_order(3), std::invalid_argument);
  CHECK_THROWS_AS(make_term_order(11), std::invalid_argument);
  auto tail = other_variables(5);
  tail.pop_back();
  CHECK_THROWS_AS(make_term_order(5, tail), std::invalid_argument);
  tail.push_back(Variable(1, 1));
  CHECK_THROWS_AS(make_term_order(5, tail), std::invalid_argument);
}

TEST_CASE("revlex examples") {
  // three variables a > b > c: b^2 > a c
  const TermOrder o = make_term_order(5);
  const Monomial a = Monomial::variable(0), b = Monomial::variable(1), c = Monomial::variable(2);
  CHECK(o.compare(a * c, b * b) < 0);
  const Monomial m1 = o.monomial({{1, 1}, {2, 2}});
  const Monomial m2 = o.monomial({{1, 2}, {1, 2}});
  CHECK(o.compare(m1, m2) > 0);
  CHECK(o.compare(m1, m1) == 0);
  CHECK(o.compare(Monomial::variable(14), Monomial()) > 0);
}

TEST_CASE("term order axioms on random triples") {
  std::mt19937 rng(20261014);
  for (int n = 4; n <= 8; ++n) {
    const TermOrder o = make_term_order(n);
    const std::size_t nv = o.num_variables();
    for (int trial = 0; trial < 2500; ++trial) {
      const Monomial a = testing::random_monomial(rng, nv, 5);
      const Monomial b = testing::random_monomial(rng, nv, 5);
      const Monomial c = testing::random_monomial(rng, nv, 5);
      const int ab = sign(o.compare(a, b));
      REQUIRE(ab == naive_compare(a, b, nv));
      REQUIRE(sign(o.compare(b, a)) == -ab);
      REQUIRE((ab == 0) == (a == b));
      const int bc = sign(o.compare(b, c));
      if (ab > 0 && bc > 0) REQUIRE(o.compare(a, c) > 0);
      if (ab > 0) REQUIRE(o.compare(a * c, b * c) > 0);
      if (a.degree() > b.degree()) REQUIRE(ab > 0);
    }
  }
}

TEST_CASE("monomial arithmetic") {
  const Monomial x = Monomial::variable(0, 2) * Monomial::variable(3);
  const Monomial y = Monomial::variable(0) * Monomial::variable(5);
  CHECK(x.degree() == 3);
  CHECK(y.divides(x * Monomial::variable(5)));
  CHECK_FALSE(y.divides(x));
  CHECK(x.lcm(y) == Monomial::variable(0, 2) * Monomial::variable(3) * Monomial::variable(5));
  CHECK((x / Monomial::variable(0)) == Monomial::variable(0) * Monomial::variable(3));
  CHECK_THROWS(y / x);
  CHECK(Monomial::variable(1).coprime(Monomial::variable(2)));
  CHECK_FALSE(x.is_square_free());
  CHECK(y.is_square_free());
  CHECK(Monomial::from_support(0b101001) == Monomial::variable(0) * Monomial::variable(3) * Monomial::variable(5));
}

TEST_CASE("leading terms") {
  auto o = order_for(5);
  const Polynomial x12 = var(o, 1, 2);
  CHECK(leading_term(x12).monomial == o->monomial({{1, 2}}));
  CHECK(leading_term(x12).coeff == 1);

  const Polynomial p = x12 * var(o, 1, 3) - var(o, 1, 1) * var(o, 2, 3);
  CHECK(leading_term(p).monomial == o->monomial({{1, 2}, {1, 3}}));
  CHECK(leading_term(p).coeff == 1);

  const Polynomial q = var(o, 1, 1) * var(o, 2, 2) - x12 * x12;
  CHECK(leading_term(q).monomial == o->monomial({{1, 1}, {2, 2}}));
  CHECK(leading_term(q).coeff == 1);

  CHECK_THROWS_AS(leading_term(Polynomial(o)), std::domain_error);
}

TEST_CASE("leading term is multiplicative") {
  std::mt19937 rng(7);
  auto o = order_for(6);
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial p = testing::random_polynomial(rng, o, 6, 4);
    const Polynomial q = testing::random_polynomial(rng, o, 6, 4);
    if (p.is_zero() || q.is_zero()) continue;
    const Term lp = leading_term(p), lq = leading_term(q), lpq = leading_term(p * q);
    REQUIRE(lpq.monomial == lp.monomial * lq.monomial);
    REQUIRE(lpq.coeff == lp.coeff * lq.coeff);
  }
}

TEST_CASE("polynomial arithmetic is exact") {
  auto o = order_for(4);
  const Polynomial a = var(o, 1, 1) + var(o, 2, 3);
  const Polynomial b = var(o, 1, 1) - var(o, 2, 3);
  CHECK(a * b == var(o, 1, 1) * var(o, 1, 1) - var(o, 2, 3) * var(o, 2, 3));
  CHECK((a - a).is_zero());
  CHECK((a + (-a)).is_zero());
  const Polynomial half = Polynomial::constant(o, Rational(1, 2));
  CHECK((half * a + half * a) == a);
  CHECK(a.is_homogeneous());
  CHECK_FALSE((a + Polynomial::constant(o, 1)).is_homogeneous());
  const auto other = order_for(5);
  CHECK_THROWS(a + var(other, 1, 1));
}

TEST_CASE("text format") {
  auto o = order_for(5);
  const Polynomial q = var(o, 1, 1) * var(o, 2, 2) - var(o, 1, 2) * var(o, 1, 2);
  CHECK(q.to_string() == "x[1][1]·x[2][2] − x[1][2]^2");
  CHECK(Polynomial(o).to_string() == "0");
  const Polynomial r = Polynomial::constant(o, Rational(-3, 2)) * var(o, 1, 4) + Polynomial::constant(o, 2);
  CHECK(r.to_string() == "−3/2·x[1][4] + 2");
  CHECK(o->format(Monomial()) == "1");
}

TEST_CASE("reduction examples") {
  auto o = order_for(5);
  const Polynomial x12 = var(o, 1, 2);
  const std::vector<Polynomial> b1{x12};
  CHECK(poly_reduce(x12 * x12, b1).is_zero());
  CHECK(poly_reduce(var(o, 1, 1), b1) == var(o, 1, 1));
  const Polynomial f = var(o, 1, 1) * var(o, 2, 2) - x12 * x12 + var(o, 1, 4) * var(o, 2, 5);
  const std::vector<Polynomial> bf{f};
  CHECK(poly_reduce(f, bf).is_zero());
  const std::vector<Polynomial> bz{Polynomial(o)};
  CHECK_THROWS(poly_reduce(f, bz));
}

TEST_CASE("reduction is idempotent and leaves no reducible term") {
  std::mt19937 rng(99);
  auto o = order_for(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Polynomial> basis;
    for (int i = 0; i < 3; ++i) {
      Polynomial g = testing::random_polynomial(rng, o, 3, 2);
      if (!g.is_zero()) basis.push_back(g);
    }
    if (basis.empty()) continue;
    const Polynomial p = testing::random_polynomial(rng, o, 8, 4);
    const Polynomial r = poly_reduce(p, basis);
    REQUIRE(poly_reduce(r, basis) == r);
    for (const Term& t : r.terms()) {
      for (const Polynomial& g : basis) REQUIRE_FALSE(leading_term(g).monomial.divides(t.monomial));
    }
  }
}
