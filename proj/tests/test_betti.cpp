#include <gmpxx.h>

#include "doctest.h"
#include "helpers.hpp"
#include "symgor/betti.hpp"
#include "symgor/complexes.hpp"
#include "symgor/groebner.hpp"
#include "symgor/minors.hpp"

using namespace symgor;

namespace {

MonomialIdeal initial_of(int n) {
  auto o = testing::order_for(n);
  std::vector<Polynomial> gens;
  for (auto& e : all_minors(o, n - 2)) gens.push_back(std::move(e.poly));
  return initial_ideal(gens);
}

BettiTable table(std::initializer_list<std::tuple<int, int, long long>> es) {
  BettiTable t;
  for (auto [i, j, v] : es) t.add(i, j, v);
  return t;
}

mpz_class binom(long n, long k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

TEST_CASE("determinantal invariants") {
  InvariantReport r = determinantal_invariants(5, 3);
  CHECK(r.dim == 9);
  CHECK(r.multiplicity == 35);
  CHECK(r.regularity == 4);
  CHECK(r.a_invariant == -5);
  CHECK(r.gorenstein);
  r = determinantal_invariants(6, 4);
  CHECK(r.dim == 15);
  CHECK(r.multiplicity == 112);
  CHECK(r.regularity == 6);
  CHECK(r.a_invariant == -9);
  CHECK_THROWS_AS(determinantal_invariants(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(determinantal_invariants(5, 6), std::invalid_argument);
}

TEST_CASE("hypersurface case t = n") {
  // the determinant is a single form of degree n
  for (int n = 2; n <= 9; ++n) {
    const InvariantReport r = determinantal_invariants(n, n);
    CHECK(r.dim == (n + 2) * (n - 1) / 2);
    CHECK(r.multiplicity == n);
    CHECK(r.regularity == n - 1);
  }
}

TEST_CASE("invariants of the (n-2)-minors follow the short closed forms") {
  for (int n = 5; n <= 12; ++n) {
    const InvariantReport r = determinantal_invariants(n, n - 2);
    CHECK(r.dim == (n + 4) * (n - 3) / 2);
    CHECK(r.multiplicity == binom(n + 2, 6) + binom(n + 3, 6));
    CHECK(r.regularity == 2 * (n - 3));
    CHECK(r.gorenstein);
  }
  // generic t: multiplicity of the 2-minors of a 3x3 symmetric matrix is 4
  // (Veronese surface), dimension 3
  const InvariantReport v = determinantal_invariants(3, 2);
  CHECK(v.dim == 3);
  CHECK(v.multiplicity == 4);
}

TEST_CASE("multiplicity equals the facet count of the matching complex") {
  for (int n = 5; n <= 7; ++n) {
    CHECK(determinantal_invariants(n, n - 2).multiplicity ==
          static_cast<long>(matching_complex_facets(2 * n, n - 3).facets().size()));
  }
}

TEST_CASE("compressed profiles") {
  CompressedProfile p = compressed_profile(6, 2);
  CHECK(p.h == std::vector<long long>{1, 6, 21, 6, 1});
  CHECK(p.multiplicity_bound == 35);
  p = compressed_profile(6, 3);
  CHECK(p.h == std::vector<long long>{1, 6, 21, 56, 21, 6, 1});
  CHECK(p.multiplicity_bound == 112);
  CHECK_THROWS(compressed_profile(0, 1));
}

TEST_CASE("compressed profile in codimension 1 against K[x]/(x^3)") {
  // Hilbert function of K[x]/(x^3): one monomial in each degree below 3
  std::vector<long long> hilbert;
  for (int d = 0; d < 6; ++d) hilbert.push_back(d < 3 ? 1 : 0);
  while (!hilbert.empty() && hilbert.back() == 0) hilbert.pop_back();
  long long length = 0;
  for (long long v : hilbert) length += v;
  const CompressedProfile p = compressed_profile(1, 1);
  CHECK(p.h == hilbert);
  CHECK(p.multiplicity_bound == length);
}

TEST_CASE("h-vector of the matching complex is the compressed profile") {
  for (int n = 5; n <= 7; ++n) {
    CHECK(f_h_vectors(matching_complex_facets(2 * n, n - 3)).h == compressed_profile(6, n - 3).h);
  }
}

TEST_CASE("closed-form Betti tables") {
  const BettiTable b5 = closed_form_betti(5);
  CHECK(b5 == table({{0, 0, 1}, {1, 3, 50}, {2, 4, 175}, {3, 5, 252}, {4, 6, 175}, {5, 7, 50}, {6, 10, 1}}));
  const BettiTable b6 = closed_form_betti(6);
  CHECK(b6.get(1, 4) == 105);
  CHECK(b6.get(2, 5) == 384);
  CHECK(b6.get(3, 6) == 560);
  CHECK(b6.get(4, 7) == 384);
  CHECK(b6.get(5, 8) == 105);
  CHECK(b6.get(6, 12) == 1);
  for (int n = 5; n <= 40; ++n) {
    const BettiTable b = closed_form_betti(n);
    CHECK(b.is_pure());
    CHECK(b.regularity() == 2 * (n - 3));
    CHECK(b.get(1, n - 2) == (n + 1) * n * n * (n - 1) / 12);
    // Gorenstein symmetry and alternating sum zero
    long long alt = 0;
    for (const auto& [ij, v] : b.entries()) {
      CHECK(b.get(6 - ij.first, 2 * n - ij.second) == v);
      alt += (ij.first % 2 ? -1 : 1) * v;
    }
    CHECK(alt == 0);
  }
  CHECK_THROWS(closed_form_betti(4));
}

TEST_CASE("Betti table formatting") {
  const BettiTable t = table({{0, 0, 1}, {1, 2, 2}, {2, 4, 1}});
  CHECK(t.to_json() == R"({"0,0": 1, "1,2": 2, "2,4": 1})");
  CHECK(t.projective_dimension() == 2);
  CHECK(t.regularity() == 2);
  CHECK_FALSE(t.to_text().empty());
}

TEST_CASE("Hochster on small ideals") {
  const BettiTable p = hochster_betti(MonomialIdeal(2, {Monomial::from_support(0b11)}));
  CHECK(p == table({{0, 0, 1}, {1, 2, 1}}));
  const MonomialIdeal ci(4, {Monomial::from_support(0b0101), Monomial::from_support(0b1010)});
  CHECK(hochster_betti(ci) == table({{0, 0, 1}, {1, 2, 2}, {2, 4, 1}}));
  // three coordinate hyperplanes: Koszul complex
  const MonomialIdeal koszul(3, {Monomial::variable(0), Monomial::variable(1), Monomial::variable(2)});
  CHECK(hochster_betti(koszul) == table({{0, 0, 1}, {1, 1, 3}, {2, 2, 3}, {3, 3, 1}}));
}

TEST_CASE("cone points do not change Betti numbers") {
  const MonomialIdeal ci(4, {Monomial::from_support(0b0101), Monomial::from_support(0b1010)});
  const MonomialIdeal ci6(6, {Monomial::from_support(0b0101), Monomial::from_support(0b1010)});
  CHECK(hochster_betti(ci) == hochster_betti(ci6));
  const auto m = matching_complex_facets(8, 2);
  const MonomialIdeal sr = stanley_reisner(m);
  const MonomialIdeal sr_cone(12, sr.generators());
  CHECK(hochster_betti(sr) == hochster_betti(sr_cone));
}

TEST_CASE("support guard") {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i + 1 < 16; i += 2) gens.push_back(Monomial::variable(i) * Monomial::variable(i + 1));
  const MonomialIdeal big(16, gens);
  HochsterOptions opt;
  opt.max_support = 14;
  CHECK_THROWS_AS(hochster_betti(big, opt), SupportTooLarge);
}

TEST_CASE("Hochster at n = 5 matches the closed form, serial and parallel") {
  const MonomialIdeal in = initial_of(5);
  HochsterOptions serial;
  serial.exec = Execution::Serial;
  const BettiTable a = hochster_betti(in, serial);
  const BettiTable b = hochster_betti(in);
  CHECK(a == b);
  CHECK(a == closed_form_betti(5));
  HochsterOptions modular;
  modular.modulus = 2147483629;
  CHECK(hochster_betti(in, modular) == a);
}

TEST_CASE("Hochster at n = 6 matches the closed form") {
  const BettiTable b = hochster_betti(initial_of(6));
  CHECK(b == closed_form_betti(6));
  CHECK(b.regularity() == 6);
  for (const auto& [ij, v] : b.entries()) CHECK(b.get(6 - ij.first, 12 - ij.second) == v);
}

TEST_CASE("h-polynomial degree") {
  CHECK(h_polynomial_degree({1, 6, 21, 6, 1}) == 4);
  CHECK(h_polynomial_degree({1, 2, 1, 0}) == 2);
}
