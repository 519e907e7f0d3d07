#include "symgor/complexes.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace symgor {

namespace {

VertexSet bit(std::size_t v) { return VertexSet{1} << v; }

VertexSet all_below(std::size_t n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

std::vector<std::size_t> members(VertexSet s) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; s != 0; ++v, s >>= 1) {
    if (s & 1U) out.push_back(v);
  }
  return out;
}

// Calls visit(subset) for every subset of `ground` with exactly k elements.
template <typename Visit>
void for_each_k_subset(VertexSet ground, int k, Visit&& visit) {
  const std::vector<std::size_t> pos = members(ground);
  const int g = static_cast<int>(pos.size());
  if (k < 0 || k > g) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexSet s = 0;
    for (int i : idx) s |= bit(pos[static_cast<std::size_t>(i)]);
    visit(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == g - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Spreads the low bits of x onto the positions of `ground` (software pdep).
VertexSet deposit(std::uint64_t x, const std::vector<std::size_t>& pos) {
  VertexSet s = 0;
  for (std::size_t i = 0; x != 0; ++i, x >>= 1) {
    if (x & 1U) s |= bit(pos[i]);
  }
  return s;
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t num_vertices, std::vector<VertexSet> faces)
    : num_vertices_(num_vertices) {
  if (num_vertices > 64) throw std::invalid_argument("simplicial complexes support at most 64 vertices");
  for (VertexSet f : faces) {
    if (f & ~all_below(num_vertices)) throw std::invalid_argument("face uses a vertex outside the ground set");
  }
  std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
    return cardinality(a) != cardinality(b) ? cardinality(a) > cardinality(b) : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (VertexSet f : faces) {
    const bool covered = std::any_of(facets_.begin(), facets_.end(), [f](VertexSet g) { return (f & ~g) == 0; });
    if (!covered) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end());
}

bool SimplicialComplex::contains_face(VertexSet s) const {
  return std::any_of(facets_.begin(), facets_.end(), [s](VertexSet f) { return (s & ~f) == 0; });
}

int SimplicialComplex::dimension() const {
  int d = -2;
  for (VertexSet f : facets_) d = std::max(d, cardinality(f) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return cardinality(f) == cardinality(facets_.front()); });
}

VertexSet SimplicialComplex::used_vertices() const {
  VertexSet s = 0;
  for (VertexSet f : facets_) s |= f;
  return s;
}

VertexSet SimplicialComplex::cone_points() const {
  if (facets_.empty()) return 0;
  VertexSet s = ~VertexSet{0};
  for (VertexSet f : facets_) s &= f;
  return s;
}

VertexSet SimplicialComplex::ground_set() const { return all_below(num_vertices_); }

SimplicialComplex SimplicialComplex::restrict_to(VertexSet w) const {
  if (facets_.empty()) return *this;
  std::vector<VertexSet> faces;
  faces.reserve(facets_.size());
  for (VertexSet f : facets_) faces.push_back(f & w);
  return SimplicialComplex(num_vertices_, std::move(faces));
}

SimplicialComplex SimplicialComplex::compress(VertexSet keep) const {
  std::vector<std::size_t> index(num_vertices_, 0);
  std::size_t next = 0;
  for (std::size_t v = 0; v < num_vertices_; ++v) {
    if (keep & bit(v)) index[v] = next++;
  }
  std::vector<VertexSet> faces;
  for (VertexSet f : facets_) {
    VertexSet g = 0;
    for (std::size_t v : members(f & keep)) g |= bit(index[v]);
    faces.push_back(g);
  }
  return SimplicialComplex(next, std::move(faces));
}

SimplicialComplex SimplicialComplex::relabel(const std::vector<std::size_t>& new_index, std::size_t size) const {
  std::vector<VertexSet> faces;
  for (VertexSet f : facets_) {
    VertexSet g = 0;
    for (std::size_t v : members(f)) g |= bit(new_index.at(v));
    faces.push_back(g);
  }
  return SimplicialComplex(size, std::move(faces));
}

std::string SimplicialComplex::to_string(const std::vector<std::string>& labels) const {
  std::vector<std::vector<std::size_t>> lists;
  for (VertexSet f : facets_) lists.push_back(members(f));
  std::sort(lists.begin(), lists.end());
  std::string out;
  for (const auto& list : lists) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i) out += ",";
      out += labels.empty() ? std::to_string(list[i] + 1) : labels.at(list[i]);
    }
    out += "\n";
  }
  return out;
}

std::vector<Variable> band_cycle_graph(int n) {
  if (n < 4) throw std::invalid_argument("band cycle needs n >= 4");
  std::vector<Variable> verts = diagonal_variables(n);
  for (const Variable& u : band_variables(n)) verts.push_back(u);
  const std::size_t m = verts.size();
  auto adjacent = [](const Variable& a, const Variable& b) {
    const bool da = a.row == a.col;
    const bool db = b.row == b.col;
    if (da == db) return false;
    const Variable& d = da ? a : b;
    const Variable& u = da ? b : a;
    return d.row == u.row || d.row == u.col;
  };
  std::vector<std::vector<std::size_t>> nbr(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && adjacent(verts[a], verts[b])) nbr[a].push_back(b);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (nbr[a].size() != 2) throw std::logic_error("band incidence graph vertex " + verts[a].name() + " has degree " + std::to_string(nbr[a].size()));
  }
  // Start at x11 heading to x12.
  const std::size_t start = 0;
  std::size_t prev = start;
  std::size_t cur = 0;
  for (std::size_t b : nbr[start]) {
    if (verts[b] == Variable(1, 2)) cur = b;
  }
  std::vector<Variable> cycle{verts[start]};
  while (cur != start) {
    if (cycle.size() >= m) throw std::logic_error("band incidence graph is not a single cycle");
    cycle.push_back(verts[cur]);
    const std::size_t next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != m) throw std::logic_error("band incidence graph splits into several cycles");
  for (std::size_t p = 0; p < m; ++p) {
    const bool d0 = cycle[p].row == cycle[p].col;
    const bool d1 = cycle[(p + 1) % m].row == cycle[(p + 1) % m].col;
    if (d0 == d1) throw std::logic_error("band cycle does not alternate between D and U");
  }
  return cycle;
}

SimplicialComplex matching_complex_facets(int m, int r) {
  if (r < 1 || 2 * r >= m || m > 64) throw std::invalid_argument("matching complex needs 1 <= r < m/2");
  const auto edge = [m](int i) { return bit(static_cast<std::size_t>(i)) | bit(static_cast<std::size_t>((i + 1) % m)); };
  std::vector<VertexSet> facets;
  // Choose r edges e_{i1} < ... < e_{ir} that are pairwise disjoint.
  std::vector<int> chosen;
  auto recurse = [&](auto&& self, int from, VertexSet covered) -> void {
    if (static_cast<int>(chosen.size()) == r) {
      facets.push_back(covered);
      return;
    }
    for (int i = from; i < m; ++i) {
      if (covered & edge(i)) continue;
      chosen.push_back(i);
      self(self, i + 1, covered | edge(i));
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return SimplicialComplex(static_cast<std::size_t>(m), std::move(facets));
}

bool gale_evenness(VertexSet s, int m) {
  for (int i = 0; i < m; ++i) {
    if (s & bit(static_cast<std::size_t>(i))) continue;
    for (int j = i + 1; j < m; ++j) {
      if (s & bit(static_cast<std::size_t>(j))) continue;
      int between = 0;
      for (int l = i + 1; l < j; ++l) between += (s >> l) & 1U;
      if (between % 2 != 0) return false;
    }
  }
  return true;
}

SimplicialComplex cyclic_polytope_facets(int m, int d) {
  if (d <= 0 || d >= m || d % 2 != 0 || m > 64) throw std::invalid_argument("cyclic polytope needs even d with 0 < d < m");
  std::vector<VertexSet> facets;
  for_each_k_subset(all_below(static_cast<std::size_t>(m)), d, [&](VertexSet s) {
    if (gale_evenness(s, m)) facets.push_back(s);
  });
  return SimplicialComplex(static_cast<std::size_t>(m), std::move(facets));
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& c) {
  if (c.is_void()) throw std::invalid_argument("minimal nonfaces of the void complex");
  const VertexSet domain = c.ground_set() & ~c.cone_points();
  std::vector<VertexSet> out;
  for (int k = 1; k <= c.dimension() + 2; ++k) {
    for_each_k_subset(domain, k, [&](VertexSet s) {
      if (c.contains_face(s)) return;
      for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
        if (!c.contains_face(s & ~(rest & (~rest + 1)))) return;
      }
      out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> independent_subsets_of_cycle(int m, int size) {
  std::vector<VertexSet> out;
  const VertexSet ground = all_below(static_cast<std::size_t>(m));
  for_each_k_subset(ground, size, [&](VertexSet s) {
    const VertexSet rotated = ((s << 1) | (s >> (m - 1))) & ground;
    if ((s & rotated) == 0) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal stanley_reisner(const SimplicialComplex& c) {
  std::vector<Monomial> gens;
  for (VertexSet s : minimal_nonfaces(c)) gens.push_back(Monomial::from_support(s));
  return MonomialIdeal(c.num_vertices(), std::move(gens));
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_square_free()) throw std::invalid_argument("complex_of_ideal needs a square-free ideal");
  const std::size_t nv = ideal.num_variables();
  const VertexSet support = ideal.support_mask();
  const VertexSet cone = all_below(nv) & ~support;
  std::vector<VertexSet> gen_masks;
  for (const Monomial& g : ideal.generators()) gen_masks.push_back(g.support_mask());
  const std::vector<std::size_t> pos = members(support);
  if (pos.size() > 30) throw std::length_error("ideal support too large for facet enumeration");
  auto independent = [&](VertexSet s) {
    return std::none_of(gen_masks.begin(), gen_masks.end(), [s](VertexSet g) { return (g & ~s) == 0; });
  };
  std::vector<VertexSet> facets;
  const std::uint64_t limit = std::uint64_t{1} << pos.size();
  for (std::uint64_t x = 0; x < limit; ++x) {
    const VertexSet s = deposit(x, pos);
    if (!independent(s)) continue;
    bool maximal = true;
    for (std::size_t v : pos) {
      if (!(s & bit(v)) && independent(s | bit(v))) {
        maximal = false;
        break;
      }
    }
    if (maximal) facets.push_back(s | cone);
  }
  return SimplicialComplex(nv, std::move(facets));
}

DimensionMultiplicity dimension_and_multiplicity(const MonomialIdeal& ideal) {
  const SimplicialComplex c = complex_of_ideal(ideal);
  DimensionMultiplicity out;
  out.dimension = c.dimension() + 1;
  for (VertexSet f : c.facets()) {
    if (cardinality(f) == out.dimension) ++out.multiplicity;
  }
  return out;
}

std::vector<long long> h_from_f(const std::vector<long long>& f) {
  const long long d = static_cast<long long>(f.size()) - 1;
  std::vector<long long> h(f.size(), 0);
  for (long long k = 0; k <= d; ++k) {
    long long sum = 0;
    for (long long i = 0; i <= k; ++i) {
      const long long term = binom(d - i, k - i) * f[static_cast<std::size_t>(i)];
      sum += (k - i) % 2 == 0 ? term : -term;
    }
    h[static_cast<std::size_t>(k)] = sum;
  }
  return h;
}

FHVectors f_h_vectors(const SimplicialComplex& c, Execution exec) {
  FHVectors out;
  if (c.is_void()) return out;
  // Cone points are handled analytically: each one maps f_k to f_k + f_{k-1}.
  const VertexSet cone = c.cone_points();
  const VertexSet base_ground = c.used_vertices() & ~cone;
  const std::vector<std::size_t> pos = members(base_ground);
  if (pos.size() > 30) throw std::length_error("too many non-cone vertices for face enumeration");
  const int top = c.dimension() + 1 - cardinality(cone);  // largest base face size
  std::vector<long long> base(static_cast<std::size_t>(top) + 1, 0);
  const std::int64_t limit = std::int64_t{1} << pos.size();
  std::vector<VertexSet> facets;
  for (VertexSet f : c.facets()) facets.push_back(f & ~cone);
  auto is_face = [&](VertexSet s) {
    return std::any_of(facets.begin(), facets.end(), [s](VertexSet f) { return (s & ~f) == 0; });
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel
    {
      std::vector<long long> local(base.size(), 0);
#pragma omp for schedule(static)
      for (std::int64_t x = 0; x < limit; ++x) {
        const VertexSet s = deposit(static_cast<std::uint64_t>(x), pos);
        if (is_face(s)) ++local[static_cast<std::size_t>(cardinality(s))];
      }
#pragma omp critical
      for (std::size_t k = 0; k < base.size(); ++k) base[k] += local[k];
    }
  } else {
    for (std::int64_t x = 0; x < limit; ++x) {
      const VertexSet s = deposit(static_cast<std::uint64_t>(x), pos);
      if (is_face(s)) ++base[static_cast<std::size_t>(cardinality(s))];
    }
  }
  std::vector<long long> f = base;
  for (int i = 0; i < cardinality(cone); ++i) {
    std::vector<long long> next(f.size() + 1, 0);
    for (std::size_t k = 0; k < f.size(); ++k) {
      next[k] += f[k];
      next[k + 1] += f[k];
    }
    f = std::move(next);
  }
  out.f = f;
  out.h = h_from_f(f);
  return out;
}

SimplicialComplex to_cycle_labels(const SimplicialComplex& c, const TermOrder& order) {
  const std::vector<Variable> cycle = band_cycle_graph(order.n());
  std::vector<std::size_t> index(c.num_vertices(), 0);
  VertexSet keep = 0;
  for (std::size_t p = 0; p < cycle.size(); ++p) {
    const std::size_t slot = order.rank(cycle[p]);
    index.at(slot) = p;
    keep |= bit(slot);
  }
  return c.restrict_to(keep).relabel(index, cycle.size());
}

}  // namespace symgor
