#include <algorithm>
#include <bit>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "symgor/complexes.hpp"
#include "symgor/homology.hpp"

using namespace symgor;

namespace {

VertexSet vs(std::initializer_list<int> one_based) {
  VertexSet s = 0;
  for (int v : one_based) s |= VertexSet{1} << (v - 1);
  return s;
}

SimplicialComplex square() { return SimplicialComplex(4, {vs({1, 2}), vs({2, 3}), vs({3, 4}), vs({1, 4})}); }

// Unions of r disjoint cycle edges, by recursion on the edge list.
std::set<VertexSet> matchings(int m, int r) {
  std::set<VertexSet> out;
  std::vector<VertexSet> edges;
  for (int i = 0; i < m; ++i) edges.push_back((VertexSet{1} << i) | (VertexSet{1} << ((i + 1) % m)));
  auto rec = [&](auto& self, std::size_t from, int left, VertexSet acc) -> void {
    if (left == 0) {
      out.insert(acc);
      return;
    }
    for (std::size_t e = from; e < edges.size(); ++e) {
      if ((acc & edges[e]) == 0) self(self, e + 1, left - 1, acc | edges[e]);
    }
  };
  rec(rec, 0, r, 0);
  return out;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("band cycle") {
  const auto c4 = band_cycle_graph(4);
  const std::vector<Variable> expect{{1, 1}, {1, 2}, {2, 2}, {2, 4}, {4, 4}, {3, 4}, {3, 3}, {1, 3}};
  CHECK(c4 == expect);
  for (int n = 4; n <= 10; ++n) {
    const auto c = band_cycle_graph(n);
    REQUIRE(c.size() == static_cast<std::size_t>(2 * n));
    for (std::size_t i = 0; i < c.size(); ++i) {
      const bool diag = c[i].row == c[i].col;
      CHECK(diag == (i % 2 == 0));
    }
  }
  const auto c5 = band_cycle_graph(5);
  const auto at = std::find(c5.begin(), c5.end(), Variable(3, 5)) - c5.begin();
  std::set<Variable> nb{c5[static_cast<std::size_t>((at + 1) % 10)], c5[static_cast<std::size_t>((at + 9) % 10)]};
  CHECK(nb == std::set<Variable>{{3, 3}, {5, 5}});
}

TEST_CASE("matching complexes") {
  CHECK(matching_complex_facets(4, 1) == square());
  CHECK(matching_complex_facets(10, 2).facets().size() == 35);
  CHECK(matching_complex_facets(12, 3).facets().size() == 112);
  CHECK_THROWS(matching_complex_facets(4, 2));
  CHECK_THROWS(matching_complex_facets(6, 0));
  const auto m = matching_complex_facets(10, 2);
  CHECK(m.is_pure());
  CHECK(m.dimension() == 3);
}

TEST_CASE("Gale evenness") {
  CHECK(cyclic_polytope_facets(4, 2) == square());
  CHECK_FALSE(gale_evenness(vs({1, 3}), 4));
  CHECK(gale_evenness(vs({1, 4}), 4));
  CHECK(cyclic_polytope_facets(10, 4) == matching_complex_facets(10, 2));
  CHECK_THROWS(cyclic_polytope_facets(6, 3));
  CHECK_THROWS(cyclic_polytope_facets(6, 6));
}

TEST_CASE("matching complex equals cyclic polytope boundary for m <= 14") {
  for (int m = 3; m <= 14; ++m) {
    for (int r = 1; 2 * r < m; ++r) {
      const auto mc = matching_complex_facets(m, r);
      const auto oracle = matchings(m, r);
      REQUIRE(std::set<VertexSet>(mc.facets().begin(), mc.facets().end()) == oracle);
      REQUIRE(static_cast<long long>(oracle.size()) == binom(m - r, r) + binom(m - r - 1, r - 1));
      REQUIRE(mc == cyclic_polytope_facets(m, 2 * r));
      if (m >= 2 * r + 2) {
        REQUIRE(minimal_nonfaces(mc) == independent_subsets_of_cycle(m, r + 1));
      } else {
        // m = 2r + 1: every 2r-subset is a facet, so the only minimal
        // nonface is the whole vertex set and the cycle has no edge-free
        // (r + 1)-subset at all.
        REQUIRE(minimal_nonfaces(mc) == std::vector<VertexSet>{(VertexSet{1} << m) - 1});
        REQUIRE(independent_subsets_of_cycle(m, r + 1).empty());
      }
    }
  }
}

TEST_CASE("minimal nonfaces") {
  CHECK(minimal_nonfaces(square()) == std::vector<VertexSet>{vs({1, 3}), vs({2, 4})});
  CHECK(minimal_nonfaces(matching_complex_facets(10, 2)).size() == 50);
  CHECK(minimal_nonfaces(matching_complex_facets(12, 3)).size() == 105);
  CHECK(independent_subsets_of_cycle(10, 3).size() == 50);
}

TEST_CASE("Stanley-Reisner translation") {
  const MonomialIdeal sq = stanley_reisner(square());
  CHECK(sq == MonomialIdeal(4, {Monomial::from_support(vs({1, 3})), Monomial::from_support(vs({2, 4}))}));
  CHECK(complex_of_ideal(sq) == square());

  // cone with apex 5: the ideal is the same, in five variables
  const SimplicialComplex cone(5, {vs({1, 2, 5}), vs({2, 3, 5}), vs({3, 4, 5}), vs({1, 4, 5})});
  const MonomialIdeal sq5 = stanley_reisner(cone);
  CHECK(sq5.generators() == sq.generators());
  CHECK(sq5.num_variables() == 5);
  CHECK(complex_of_ideal(sq5) == cone);
  CHECK(cone.cone_points() == vs({5}));

  for (int m = 5; m <= 10; ++m) {
    const auto c = matching_complex_facets(m, 2);
    CHECK(complex_of_ideal(stanley_reisner(c)) == c);
  }
  CHECK_THROWS(complex_of_ideal(MonomialIdeal(3, {Monomial::variable(0, 2)})));
}

TEST_CASE("a vertex in no facet survives the round trip") {
  const MonomialIdeal i(3, {Monomial::variable(2), Monomial::from_support(0b011)});
  const SimplicialComplex c = complex_of_ideal(i);
  CHECK(c.facets() == std::vector<VertexSet>{0b001, 0b010});
  CHECK(stanley_reisner(c) == i);
}

TEST_CASE("dimension and multiplicity") {
  const MonomialIdeal sq(4, {Monomial::from_support(vs({1, 3})), Monomial::from_support(vs({2, 4}))});
  CHECK(dimension_and_multiplicity(sq) == DimensionMultiplicity{2, 4});
}

TEST_CASE("f- and h-vectors") {
  const FHVectors sq = f_h_vectors(square());
  CHECK(sq.f == std::vector<long long>{1, 4, 4});
  CHECK(sq.h == std::vector<long long>{1, 2, 1});
  const FHVectors m10 = f_h_vectors(matching_complex_facets(10, 2));
  CHECK(m10.f == std::vector<long long>{1, 10, 45, 70, 35});
  CHECK(m10.h == std::vector<long long>{1, 6, 21, 6, 1});
  const FHVectors m12 = f_h_vectors(matching_complex_facets(12, 3));
  CHECK(m12.h == std::vector<long long>{1, 6, 21, 56, 21, 6, 1});
  long long sum = 0;
  for (long long h : m12.h) sum += h;
  CHECK(sum == 112);
}

TEST_CASE("f-vectors: cone step and serial/parallel agreement") {
  for (int m = 6; m <= 14; m += 2) {
    const auto c = matching_complex_facets(m, m / 2 - 2 > 0 ? m / 2 - 2 : 1);
    const FHVectors a = f_h_vectors(c, Execution::Serial);
    const FHVectors b = f_h_vectors(c, Execution::Parallel);
    REQUIRE(a.f == b.f);
    REQUIRE(a.h == b.h);
    // Euler relation for a sphere of dimension d - 1
    const int d = static_cast<int>(a.f.size()) - 1;
    long long chi = 0;
    for (int k = 0; k < d; ++k) chi += (k % 2 ? -1 : 1) * a.f[static_cast<std::size_t>(k + 1)];
    REQUIRE(chi == 1 + ((d - 1) % 2 ? -1 : 1));
  }
  // cone over the square: f = (1, 5, 8, 4), h unchanged
  const SimplicialComplex cone(5, {vs({1, 2, 5}), vs({2, 3, 5}), vs({3, 4, 5}), vs({1, 4, 5})});
  const FHVectors fc = f_h_vectors(cone);
  CHECK(fc.f == std::vector<long long>{1, 5, 8, 4});
  CHECK(fc.h == std::vector<long long>{1, 2, 1, 0});
}

TEST_CASE("reduced homology") {
  const SimplicialComplex triangle(3, {vs({1, 2}), vs({2, 3}), vs({1, 3})});
  CHECK(reduced_homology_ranks(triangle) == std::vector<long long>{0, 0, 1});
  const SimplicialComplex simplex(3, {vs({1, 2, 3})});
  CHECK(reduced_homology_ranks(simplex) == std::vector<long long>{0, 0, 0, 0});
  const SimplicialComplex points(2, {vs({1}), vs({2})});
  CHECK(reduced_homology_ranks(points) == std::vector<long long>{0, 1});
  const SimplicialComplex empty_face(2, {VertexSet{0}});
  CHECK(reduced_homology_ranks(empty_face) == std::vector<long long>{1});
  // two disjoint circles: H0 = 1, H1 = 2
  const SimplicialComplex circles(6, {vs({1, 2}), vs({2, 3}), vs({1, 3}), vs({4, 5}), vs({5, 6}), vs({4, 6})});
  CHECK(reduced_homology_ranks(circles) == std::vector<long long>{0, 1, 2});
}

TEST_CASE("exact and modular ranks agree") {
  std::vector<SparseRow> rows{{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}, {{1, 1}, {2, mpq_class(1, 3)}}};
  CHECK(rational_rank(rows) == 2);
  CHECK(modular_rank(rows, 1000003) == 2);
  const auto faces = faces_by_dimension(matching_complex_facets(10, 2));
  CHECK(reduced_homology_ranks(faces, (VertexSet{1} << 10) - 1, 0) ==
        reduced_homology_ranks(faces, (VertexSet{1} << 10) - 1, 2147483629));
}

TEST_CASE("sphere checks") {
  const SphereReport sq = sphere_checks(square());
  CHECK(sq.all());
  CHECK(sq.reduced_homology == std::vector<long long>{0, 0, 1});
  const SphereReport m10 = sphere_checks(matching_complex_facets(10, 2));
  CHECK(m10.pseudomanifold);
  CHECK(m10.reduced_homology == std::vector<long long>{0, 0, 0, 0, 1});
  CHECK(m10.all());
  const SphereReport m12 = sphere_checks(matching_complex_facets(12, 3));
  CHECK(m12.all());
  CHECK(m12.reduced_homology == std::vector<long long>{0, 0, 0, 0, 0, 0, 1});
  // a disk is not a pseudomanifold
  const SimplicialComplex disk(4, {vs({1, 2, 3}), vs({1, 3, 4})});
  CHECK_FALSE(sphere_checks(disk).pseudomanifold);
}

TEST_CASE("complex operations") {
  const auto sq = square();
  CHECK(sq.contains_face(vs({1, 2})));
  CHECK_FALSE(sq.contains_face(vs({1, 3})));
  CHECK(sq.restrict_to(vs({1, 2, 3})).facets() == std::vector<VertexSet>{vs({1, 2}), vs({2, 3})});
  CHECK(SimplicialComplex().dimension() == -2);
  CHECK(SimplicialComplex(2, {0}).dimension() == -1);
  CHECK(sq.to_string() == "1,2\n1,4\n2,3\n3,4\n");
}
