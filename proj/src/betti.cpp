#include "symgor/betti.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

#include "symgor/homology.hpp"

namespace symgor {

namespace {

mpz_class binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long long exact_integer(const mpq_class& q, const char* what) {
  mpq_class v = q;
  v.canonicalize();
  if (v.get_den() != 1) throw std::domain_error(std::string(what) + " is not an integer");
  if (!v.get_num().fits_slong_p()) throw std::overflow_error(std::string(what) + " overflows");
  return v.get_num().get_si();
}

}  // namespace

InvariantReport determinantal_invariants(int n, int t) {
  if (t < 2 || t > n) throw std::invalid_argument("determinantal invariants need 2 <= t <= n");
  InvariantReport r;
  const bool even = (n - t) % 2 == 0;
  r.gorenstein = even;
  r.dim = exact_integer(mpq_class((2 * n + 2 - t) * (t - 1), 2), "dimension");
  mpq_class e = 1;
  for (int a = 0; a <= n - t; ++a) {
    e *= mpq_class(binomial(n + a, t + 2 * a - 1), binomial(2 * a + 1, a));
  }
  e.canonicalize();
  if (e.get_den() != 1) throw std::domain_error("multiplicity is not an integer");
  r.multiplicity = e.get_num();
  if (even) {
    r.regularity = exact_integer(mpq_class((n + 2 - t) * (t - 1), 2), "regularity");
    r.a_invariant = -exact_integer(mpq_class(n * (t - 1), 2), "a-invariant");
  } else {
    r.regularity = exact_integer(mpq_class((n + 1 - t) * (t - 1), 2), "regularity");
    r.a_invariant = -exact_integer(mpq_class((n + 1) * (t - 1), 2), "a-invariant");
  }
  return r;
}

CompressedProfile compressed_profile(int c, int s) {
  if (c < 1 || s < 0) throw std::invalid_argument("compressed profile needs c >= 1 and s >= 0");
  CompressedProfile p;
  p.h.assign(static_cast<std::size_t>(2 * s + 1), 0);
  for (int i = 0; i <= s; ++i) {
    const long long v = binomial(c - 1 + i, c - 1).get_si();
    p.h[static_cast<std::size_t>(i)] = v;
    p.h[static_cast<std::size_t>(2 * s - i)] = v;
  }
  p.multiplicity_bound = mpz_class(binomial(c - 1 + s, c) + binomial(c + s, c)).get_si();
  return p;
}

long long BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long value) {
  if (value == 0) return;
  long long& slot = entries_[{i, j}];
  slot += value;
  if (slot == 0) entries_.erase({i, j});
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto& [key, v] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

bool BettiTable::is_pure() const {
  std::map<int, int> shifts;
  for (const auto& [key, v] : entries_) ++shifts[key.first];
  return std::all_of(shifts.begin(), shifts.end(), [](const auto& kv) { return kv.second == 1; });
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, v] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::string BettiTable::to_json() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [key, v] : entries_) {
    if (!first) out << ", ";
    first = false;
    out << "\"" << key.first << "," << key.second << "\": " << v;
  }
  out << "}";
  return out.str();
}

std::string BettiTable::to_text() const {
  const int pd = projective_dimension();
  const int reg = regularity();
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(reg + 1),
                                              std::vector<std::string>(static_cast<std::size_t>(pd + 1), "."));
  std::size_t width = 1;
  for (const auto& [key, v] : entries_) {
    std::string s = std::to_string(v);
    width = std::max(width, s.size());
    cells[static_cast<std::size_t>(key.second - key.first)][static_cast<std::size_t>(key.first)] = std::move(s);
  }
  std::ostringstream out;
  const std::size_t label = std::to_string(reg).size() + 1;
  out << std::string(label + 1, ' ');
  for (int i = 0; i <= pd; ++i) {
    const std::string head = std::to_string(i);
    out << std::string(width + 1 - head.size(), ' ') << head;
  }
  out << "\n";
  for (int r = 0; r <= reg; ++r) {
    const std::string head = std::to_string(r) + ":";
    out << std::string(label + 1 - head.size(), ' ') << head;
    for (int i = 0; i <= pd; ++i) {
      const std::string& s = cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
      out << std::string(width + 1 - s.size(), ' ') << s;
    }
    out << "\n";
  }
  return out.str();
}

BettiTable closed_form_betti(int n) {
  if (n < 5) throw std::invalid_argument("closed-form Betti table needs n >= 5");
  const mpq_class N = n;
  const mpq_class values[3] = {
      (N + 1) * N * N * (N - 1) / 12,
      (N + 2) * N * N * (N - 2) / 3,
      (N + 2) * (N + 1) * (N - 1) * (N - 2) / 2,
  };
  BettiTable t;
  t.add(0, 0, 1);
  t.add(6, 2 * n, 1);
  for (int i = 1; i <= 3; ++i) {
    const long long v = exact_integer(values[i - 1], "closed-form Betti number");
    t.add(i, n - 3 + i, v);
    if (i != 3) t.add(6 - i, n + 3 - i, v);
  }
  return t;
}

SupportTooLarge::SupportTooLarge(std::size_t size)
    : std::length_error("Hochster enumeration refused: support has " + std::to_string(size) + " variables"),
      size_(size) {}

BettiTable hochster_betti(const MonomialIdeal& ideal, const HochsterOptions& options) {
  const VertexSet support = ideal.support_mask();
  const std::size_t size = static_cast<std::size_t>(cardinality(support));
  if (size > options.max_support) throw SupportTooLarge(size);
  const SimplicialComplex base = complex_of_ideal(ideal).compress(support);
  const std::vector<std::vector<VertexSet>> faces = faces_by_dimension(base);

  auto accumulate = [&](std::int64_t w, std::map<std::pair<int, int>, long long>& into) {
    const int j = cardinality(static_cast<VertexSet>(w));
    const std::vector<long long> ranks = reduced_homology_ranks(faces, static_cast<VertexSet>(w), options.modulus);
    for (std::size_t q = 0; q < ranks.size(); ++q) {
      if (ranks[q] == 0) continue;
      const int k = static_cast<int>(q) - 1;  // homology degree
      into[{j - k - 1, j}] += ranks[q];
    }
  };

  const std::int64_t limit = std::int64_t{1} << size;
  std::map<std::pair<int, int>, long long> total;
  if (options.exec == Execution::Parallel) {
#pragma omp parallel
    {
      std::map<std::pair<int, int>, long long> local;
#pragma omp for schedule(dynamic, 16)
      for (std::int64_t w = 0; w < limit; ++w) accumulate(w, local);
#pragma omp critical
      for (const auto& [key, v] : local) total[key] += v;
    }
  } else {
    for (std::int64_t w = 0; w < limit; ++w) accumulate(w, total);
  }
  BettiTable table;
  for (const auto& [key, v] : total) table.add(key.first, key.second, v);
  return table;
}

int h_polynomial_degree(const std::vector<long long>& h) {
  for (std::size_t i = h.size(); i-- > 0;) {
    if (h[i] != 0) return static_cast<int>(i);
  }
  return 0;
}

}  // namespace symgor
