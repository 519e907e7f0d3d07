#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symgor/execution.hpp"
#include "symgor/monomial_ideal.hpp"
#include "symgor/term_order.hpp"

namespace symgor {

/// Vertex subsets as bitmasks; vertex v is bit v (0-based).
using VertexSet = std::uint64_t;

inline int cardinality(VertexSet s) { return __builtin_popcountll(s); }

/// Finite simplicial complex on vertices 0..num_vertices-1, stored by its
/// facets. A vertex may lie in no facet (it is then a non-vertex of the
/// ground set, i.e. a degree-1 nonface). The void complex has no facets;
/// the complex {∅} has the single empty facet.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Accepts any generating family of faces; keeps the inclusion-maximal
  /// ones, sorted ascending.
  SimplicialComplex(std::size_t num_vertices, std::vector<VertexSet> faces);

  std::size_t num_vertices() const { return num_vertices_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }

  bool contains_face(VertexSet s) const;
  /// Largest facet cardinality minus one; -1 for {∅}, -2 for the void complex.
  int dimension() const;
  bool is_pure() const;
  /// Vertices lying in at least one facet.
  VertexSet used_vertices() const;
  /// Vertices lying in every facet.
  VertexSet cone_points() const;
  VertexSet ground_set() const;

  /// Induced subcomplex on w (faces contained in w).
  SimplicialComplex restrict_to(VertexSet w) const;
  /// Keeps only the vertices in `keep`, renumbered 0.. in increasing order.
  SimplicialComplex compress(VertexSet keep) const;
  /// Applies a vertex relabeling old -> new on a ground set of `size`.
  SimplicialComplex relabel(const std::vector<std::size_t>& new_index, std::size_t size) const;

  /// Sorted facets, one per line, vertices comma-separated and 1-based
  /// unless labels are given.
  std::string to_string(const std::vector<std::string>& labels = {}) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<VertexSet> facets_;
};

/// The 2n-cycle on D ∪ U in traversal order starting x11, x12, x22, ...
/// Throws std::logic_error if the incidence graph is not a single
/// alternating cycle.
std::vector<Variable> band_cycle_graph(int n);

/// Facets of the matching complex on the m-cycle: unions of r pairwise
/// disjoint cycle edges. Requires 1 <= r and 2r < m.
SimplicialComplex matching_complex_facets(int m, int r);

/// Facets of the boundary of the cyclic polytope C(m, d) via Gale's
/// evenness condition. Requires d even and 0 < d < m.
SimplicialComplex cyclic_polytope_facets(int m, int d);

/// True iff s is a Gale-evenness facet of C(m, d) (|s| = d assumed by caller).
bool gale_evenness(VertexSet s, int m);

/// Inclusion-minimal nonfaces by exhaustive search over vertex subsets of
/// size at most dim + 2. Cone points are excluded from the search domain
/// since no minimal nonface can contain one. Sorted ascending.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& c);

/// Edge-free (size)-subsets of the m-cycle, sorted ascending.
std::vector<VertexSet> independent_subsets_of_cycle(int m, int size);

/// Stanley-Reisner ideal: one square-free generator per minimal nonface.
MonomialIdeal stanley_reisner(const SimplicialComplex& c);

/// Complex whose faces are the vertex sets containing no generator support.
/// Variables outside every generator become cone points. Throws on a
/// non-square-free ideal.
SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal);

struct DimensionMultiplicity {
  int dimension = 0;
  long long multiplicity = 0;
  bool operator==(const DimensionMultiplicity&) const = default;
};

/// Krull dimension and multiplicity of K[x]/I for square-free I: the largest
/// face cardinality and the number of faces attaining it.
DimensionMultiplicity dimension_and_multiplicity(const MonomialIdeal& ideal);

struct FHVectors {
  std::vector<long long> f;  // f[0] = f_{-1} = 1, f[k+1] = number of k-faces
  std::vector<long long> h;  // h_0 .. h_{dim+1}
};

/// Exact f-vector by enumeration of all vertex subsets (parallel kernel with
/// a serial reference) and the h-vector by the standard transform.
FHVectors f_h_vectors(const SimplicialComplex& c, Execution exec = Execution::Parallel);

/// h-vector from an f-vector given as f_{-1}, f_0, ..., f_{d-1}.
std::vector<long long> h_from_f(const std::vector<long long>& f);

struct SphereReport {
  bool pure = false;
  bool pseudomanifold = false;
  bool sphere_homology = false;
  bool h_symmetric = false;
  std::vector<long long> reduced_homology;  // index k+1 holds rank H̃_k
  bool all() const { return pure && pseudomanifold && sphere_homology && h_symmetric; }
};

/// Necessary conditions for a homology sphere: purity, every ridge in
/// exactly two facets, reduced rational homology of S^dim, symmetric h.
SphereReport sphere_checks(const SimplicialComplex& c);

/// The initial-ideal complex restricted to D ∪ U, written on cycle
/// positions 0..2n-1 of band_cycle_graph(n). Vertices of `c` are the slots
/// of `order`.
SimplicialComplex to_cycle_labels(const SimplicialComplex& c, const TermOrder& order);

}  // namespace symgor
