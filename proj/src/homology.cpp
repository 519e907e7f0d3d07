#include "symgor/homology.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace symgor {

namespace {

// a - factor * b on sorted sparse rows.
SparseRow axpy(const SparseRow& a, const mpq_class& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -factor * b[j].second);
      ++j;
    } else {
      mpq_class v = a[i].second - factor * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

using ModRow = std::vector<std::pair<int, std::uint64_t>>;

ModRow axpy_mod(const ModRow& a, std::uint64_t factor, const ModRow& b, std::uint64_t p) {
  ModRow out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, (p - factor * b[j].second % p) % p);
      ++j;
    } else {
      const std::uint64_t v = (a[i].second + p - factor * b[j].second % p) % p;
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t e = p - 2;
  a %= p;
  while (e) {
    if (e & 1U) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

void enumerate_faces(VertexSet facet, std::vector<VertexSet>& out) {
  // All subsets of the facet, including the empty face.
  VertexSet s = facet;
  while (true) {
    out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & facet;
  }
}

}  // namespace

std::size_t rational_rank(std::vector<SparseRow> rows) {
  std::map<int, SparseRow> pivots;
  std::size_t rank = 0;
  for (SparseRow& row : rows) {
    SparseRow r = std::move(row);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        const mpq_class lead = r.front().second;
        for (auto& [col, v] : r) v /= lead;
        pivots.emplace(r.front().first, std::move(r));
        ++rank;
        break;
      }
      r = axpy(r, r.front().second, it->second);
    }
  }
  return rank;
}

std::size_t modular_rank(const std::vector<SparseRow>& rows, std::uint32_t prime) {
  const std::uint64_t p = prime;
  std::map<int, ModRow> pivots;
  std::size_t rank = 0;
  for (const SparseRow& row : rows) {
    ModRow r;
    for (const auto& [col, v] : row) {
      mpz_class num = v.get_num() % prime;
      if (num < 0) num += prime;
      mpz_class den = v.get_den() % prime;
      if (den == 0) throw std::domain_error("entry denominator vanishes modulo the prime");
      const std::uint64_t value = num.get_ui() * inverse_mod(den.get_ui(), p) % p;
      if (value != 0) r.emplace_back(col, value);
    }
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        const std::uint64_t inv = inverse_mod(r.front().second, p);
        for (auto& [col, v] : r) v = v * inv % p;
        pivots.emplace(r.front().first, std::move(r));
        ++rank;
        break;
      }
      r = axpy_mod(r, r.front().second, it->second, p);
    }
  }
  return rank;
}

std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& c) {
  if (c.is_void()) return {};
  std::vector<VertexSet> all;
  for (VertexSet f : c.facets()) enumerate_faces(f, all);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(c.dimension() + 2));
  for (VertexSet s : all) out[static_cast<std::size_t>(cardinality(s))].push_back(s);
  return out;
}

std::vector<long long> reduced_homology_ranks(const std::vector<std::vector<VertexSet>>& faces, VertexSet w,
                                              std::uint32_t modulus) {
  if (faces.empty()) return {};
  std::vector<std::vector<VertexSet>> chains;
  for (const auto& group : faces) {
    std::vector<VertexSet> kept;
    for (VertexSet s : group) {
      if ((s & ~w) == 0) kept.push_back(s);
    }
    if (kept.empty()) break;
    chains.push_back(std::move(kept));
  }
  // chains[k+1] are the k-faces; boundary_rank[k+1] = rank of d_k : C_k -> C_{k-1}.
  std::vector<long long> boundary_rank(chains.size() + 1, 0);
  for (std::size_t q = 1; q < chains.size(); ++q) {
    const std::vector<VertexSet>& lower = chains[q - 1];
    std::vector<SparseRow> rows;
    rows.reserve(chains[q].size());
    for (VertexSet s : chains[q]) {
      SparseRow row;
      int position = 0;
      for (VertexSet rest = s; rest != 0; rest &= rest - 1, ++position) {
        const VertexSet face = s & ~(rest & (~rest + 1));
        const auto it = std::lower_bound(lower.begin(), lower.end(), face);
        row.emplace_back(static_cast<int>(it - lower.begin()), mpq_class(position % 2 == 0 ? 1 : -1));
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
    boundary_rank[q] = static_cast<long long>(modulus == 0 ? rational_rank(std::move(rows)) : modular_rank(rows, modulus));
  }
  std::vector<long long> out(chains.size(), 0);
  for (std::size_t q = 0; q < chains.size(); ++q) {
    out[q] = static_cast<long long>(chains[q].size()) - boundary_rank[q] - boundary_rank[q + 1];
  }
  return out;
}

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& c) {
  return reduced_homology_ranks(faces_by_dimension(c), c.ground_set());
}

SphereReport sphere_checks(const SimplicialComplex& c) {
  SphereReport report;
  if (c.is_void()) return report;
  report.pure = c.is_pure();
  std::map<VertexSet, int> ridges;
  for (VertexSet f : c.facets()) {
    for (VertexSet rest = f; rest != 0; rest &= rest - 1) ++ridges[f & ~(rest & (~rest + 1))];
  }
  report.pseudomanifold = report.pure && std::all_of(ridges.begin(), ridges.end(), [](const auto& kv) { return kv.second == 2; });
  report.reduced_homology = reduced_homology_ranks(c);
  const std::size_t top = static_cast<std::size_t>(c.dimension() + 1);
  report.sphere_homology = report.reduced_homology.size() == top + 1;
  for (std::size_t q = 0; q < report.reduced_homology.size(); ++q) {
    if (report.reduced_homology[q] != (q == top ? 1 : 0)) report.sphere_homology = false;
  }
  const std::vector<long long> h = f_h_vectors(c).h;
  report.h_symmetric = std::equal(h.begin(), h.end(), h.rbegin());
  return report;
}

}  // namespace symgor
