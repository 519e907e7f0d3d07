#include "symgor/minors.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_set>

namespace symgor {

namespace {

using Mask = std::uint32_t;

Mask to_mask(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= Mask{1} << (i - 1);
  return m;
}

std::vector<int> from_mask(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1U) out.push_back(i + 1);
  }
  return out;
}

// Lexicographic comparison of two equal-size index sets as sorted sequences:
// the set owning the lowest differing index is smaller.
bool lex_less(Mask a, Mask b) {
  const Mask d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (~d + 1))) != 0;
}

std::uint64_t canonical_key(Mask rows, Mask cols) {
  if (lex_less(cols, rows)) std::swap(rows, cols);
  return (std::uint64_t{rows} << 32) | cols;
}

// k-subsets of [n] as masks, in lexicographic order of their sorted sequences.
std::vector<Mask> subsets_lex(int n, int k) {
  std::vector<Mask> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  if (k == 0) return {0};
  while (true) {
    out.push_back(to_mask(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<std::pair<Mask, Mask>> canonical_pairs(int n, int k) {
  const std::vector<Mask> sets = subsets_lex(n, k);
  std::vector<std::pair<Mask, Mask>> out;
  out.reserve(sets.size() * (sets.size() + 1) / 2);
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a; b < sets.size(); ++b) out.emplace_back(sets[a], sets[b]);
  }
  return out;
}

int permutation_sign(std::vector<int> seq) {
  int sign = 1;
  // Insertion-sort transposition parity; sequences are short.
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] > seq[j]; --j) {
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  }
  return sign;
}

void check_indices(int n, const std::vector<int>& idx, const char* what) {
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument(std::string("repeated ") + what + " index in minor");
  }
  for (int i : idx) {
    if (i < 1 || i > n) throw std::invalid_argument(std::string(what) + " index out of range in minor");
  }
}

// One Laplace step along the first row: sum_j (-1)^j x_{r0,c_j} [R - r0 | C - c_j].
template <typename Lookup>
Polynomial expand_first_row(const Polynomial::OrderPtr& order, Mask rows, Mask cols, Lookup&& sub_minor) {
  const int r0 = std::countr_zero(rows) + 1;
  const Mask rest = rows & (rows - 1);
  Polynomial sum(order);
  int j = 0;
  for (Mask c = cols; c != 0; c &= c - 1, ++j) {
    const int col = std::countr_zero(c) + 1;
    const Polynomial& sub = sub_minor(rest, cols & ~(Mask{1} << (col - 1)));
    if (sub.is_zero()) continue;
    const Monomial x = Monomial::variable(order->rank(Variable(r0, col)));
    sum += sub.mul_term(x, Rational(j % 2 == 0 ? 1 : -1));
  }
  return sum;
}

// Level-synchronous table of all canonical k-minors; level k is built from
// level k-1 in one parallel loop.
class MinorLevels {
 public:
  MinorLevels(Polynomial::OrderPtr order, Execution exec) : order_(std::move(order)), exec_(exec) {}

  void advance() {
    const int n = order_->n();
    const int k = level_ + 1;
    std::vector<std::pair<Mask, Mask>> pairs = canonical_pairs(n, k);
    std::vector<Polynomial> polys(pairs.size(), Polynomial(order_));
    const Polynomial zero(order_);
    auto lookup = [&](Mask r, Mask c) -> const Polynomial& {
      if (r == 0) return one_;
      auto it = index_.find(canonical_key(r, c));
      return it == index_.end() ? zero : polys_[it->second];
    };
    const long count = static_cast<long>(pairs.size());
    if (exec_ == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
      for (long i = 0; i < count; ++i) {
        const auto [r, c] = pairs[static_cast<std::size_t>(i)];
        polys[static_cast<std::size_t>(i)] = expand_first_row(order_, r, c, lookup);
      }
    } else {
      for (long i = 0; i < count; ++i) {
        const auto [r, c] = pairs[static_cast<std::size_t>(i)];
        polys[static_cast<std::size_t>(i)] = expand_first_row(order_, r, c, lookup);
      }
    }
    index_.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) index_.emplace(canonical_key(pairs[i].first, pairs[i].second), i);
    pairs_ = std::move(pairs);
    polys_ = std::move(polys);
    level_ = k;
  }

  int level() const { return level_; }
  const std::vector<std::pair<Mask, Mask>>& pairs() const { return pairs_; }
  std::vector<Polynomial>& polys() { return polys_; }

 private:
  Polynomial::OrderPtr order_;
  Execution exec_;
  Polynomial one_ = Polynomial::constant(order_, Rational(1));
  int level_ = 0;
  std::vector<std::pair<Mask, Mask>> pairs_;
  std::vector<Polynomial> polys_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string MinorSpec::to_string() const { return "[" + join(rows) + "|" + join(cols) + "]"; }

MinorSpec make_minor_spec(int n, std::vector<int> rows, std::vector<int> cols) {
  if (rows.size() != cols.size() || rows.empty()) throw std::invalid_argument("minor needs equal nonzero row and column counts");
  check_indices(n, rows, "row");
  check_indices(n, cols, "column");
  if (!std::is_sorted(rows.begin(), rows.end()) || !std::is_sorted(cols.begin(), cols.end())) {
    throw std::invalid_argument("minor spec indices must be strictly increasing");
  }
  if (cols < rows) std::swap(rows, cols);
  return MinorSpec{n, std::move(rows), std::move(cols)};
}

MinorEvaluator::MinorEvaluator(Polynomial::OrderPtr order) : order_(std::move(order)) {
  if (order_->n() > 31) throw std::invalid_argument("matrix too large for minor evaluation");
}

const Polynomial& MinorEvaluator::minor_masks(Mask rows, Mask cols) {
  const std::uint64_t key = canonical_key(rows, cols);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Polynomial value(order_);
  if (std::popcount(rows) == 1) {
    value = Polynomial::variable(order_, Variable(std::countr_zero(rows) + 1, std::countr_zero(cols) + 1));
  } else {
    value = expand_first_row(order_, rows, cols, [this](Mask r, Mask c) -> const Polynomial& { return minor_masks(r, c); });
  }
  return cache_.emplace(key, std::move(value)).first->second;
}

const Polynomial& MinorEvaluator::minor(const MinorSpec& spec) {
  return minor_masks(to_mask(spec.rows), to_mask(spec.cols));
}

Polynomial MinorEvaluator::minor(const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size() || rows.empty()) throw std::invalid_argument("minor needs equal nonzero row and column counts");
  check_indices(order_->n(), rows, "row");
  check_indices(order_->n(), cols, "column");
  const int sign = permutation_sign(rows) * permutation_sign(cols);
  const Polynomial& p = minor_masks(to_mask(rows), to_mask(cols));
  return sign > 0 ? p : -p;
}

Polynomial minor_polynomial(const Polynomial::OrderPtr& order, const std::vector<int>& rows, const std::vector<int>& cols) {
  MinorEvaluator eval(order);
  return eval.minor(rows, cols);
}

Polynomial minor_polynomial(const Polynomial::OrderPtr& order, const MinorSpec& spec) {
  MinorEvaluator eval(order);
  return eval.minor(spec);
}

std::size_t minor_count(int n, int t) {
  std::size_t k = 1;
  for (int i = 0; i < t; ++i) k = k * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
  return k * (k - 1) / 2 + k;
}

std::vector<MinorEntry> all_minors(const Polynomial::OrderPtr& order, int t, Execution exec) {
  const int n = order->n();
  if (t < 2 || t > n) throw std::invalid_argument("minor size t must satisfy 2 <= t <= n");
  std::vector<MinorEntry> out;
  if (exec == Execution::Serial) {
    MinorEvaluator eval(order);
    for (const auto& [r, c] : canonical_pairs(n, t)) {
      MinorSpec spec{n, from_mask(r), from_mask(c)};
      const Polynomial& p = eval.minor(spec);
      out.push_back(MinorEntry{std::move(spec), p});
    }
    return out;
  }
  MinorLevels levels(order, exec);
  while (levels.level() < t) levels.advance();
  out.reserve(levels.pairs().size());
  for (std::size_t i = 0; i < levels.pairs().size(); ++i) {
    const auto [r, c] = levels.pairs()[i];
    out.push_back(MinorEntry{MinorSpec{n, from_mask(r), from_mask(c)}, std::move(levels.polys()[i])});
  }
  return out;
}

void scan_minor_leading_terms(const Polynomial::OrderPtr& order, int max_size,
                              const std::function<void(int, const MinorSpec&, const Term&)>& visit, Execution exec) {
  const int n = order->n();
  if (max_size < 1 || max_size > n) throw std::invalid_argument("minor size out of range");
  if (exec == Execution::Serial) {
    MinorEvaluator eval(order);
    for (int s = 1; s <= max_size; ++s) {
      for (const auto& [r, c] : canonical_pairs(n, s)) {
        const MinorSpec spec{n, from_mask(r), from_mask(c)};
        const Polynomial& p = eval.minor(spec);
        if (!p.is_zero()) visit(s, spec, p.leading_term());
      }
    }
    return;
  }
  MinorLevels levels(order, exec);
  while (levels.level() < max_size) {
    levels.advance();
    for (std::size_t i = 0; i < levels.pairs().size(); ++i) {
      const auto [r, c] = levels.pairs()[i];
      const Polynomial& p = levels.polys()[i];
      if (!p.is_zero()) visit(levels.level(), MinorSpec{n, from_mask(r), from_mask(c)}, p.leading_term());
    }
  }
}

IndexSequences special_indices_low(int ell, Parity parity) {
  if (ell < 1) throw std::invalid_argument("staircase parameter must be >= 1");
  const int size = parity == Parity::Odd ? 2 * ell + 1 : 2 * ell;
  IndexSequences seq;
  for (int p = 1; p <= size; ++p) {
    if (p == 1) {
      seq.rows.push_back(1);
      seq.cols.push_back(2);
    } else if (p % 2 == 0) {
      const int i = p / 2;
      seq.rows.push_back(2 * i + 1);
      seq.cols.push_back(2 * i - 1);
    } else {
      const int i = (p - 1) / 2;
      seq.rows.push_back(2 * i);
      seq.cols.push_back(2 * i + 2);
    }
  }
  return seq;
}

IndexSequences special_indices_high(int ell, Parity parity, int n) {
  if (ell < 1) throw std::invalid_argument("staircase parameter must be >= 1");
  const int size = parity == Parity::Odd ? 2 * ell + 1 : 2 * ell;
  IndexSequences seq;
  // Position s - k counted back from the last entry.
  for (int k = size - 1; k >= 0; --k) {
    if (k == 0) {
      seq.rows.push_back(n - 1);
      seq.cols.push_back(n);
    } else if (k % 2 == 0) {
      const int i = k / 2;
      seq.rows.push_back(n - (2 * i + 1));
      seq.cols.push_back(n - (2 * i - 1));
    } else {
      const int i = (k + 1) / 2;
      seq.rows.push_back(n - (2 * i - 2));
      seq.cols.push_back(n - 2 * i);
    }
  }
  for (int v : seq.rows) {
    if (v < 1) throw std::invalid_argument("staircase parameter too large for matrix size");
  }
  for (int v : seq.cols) {
    if (v < 1) throw std::invalid_argument("staircase parameter too large for matrix size");
  }
  return seq;
}

std::vector<Variable> staircase_leading_factors_low(std::size_t size) {
  std::vector<Variable> out{Variable(1, 2)};
  for (int k = 1; k < static_cast<int>(size); ++k) out.emplace_back(k, k + 2);
  return out;
}

std::vector<Variable> staircase_leading_factors_high(std::size_t size, int n) {
  std::vector<Variable> out;
  for (int k = n - static_cast<int>(size); k <= n - 2; ++k) out.emplace_back(k, k + 2);
  out.emplace_back(n - 1, n);
  return out;
}

std::vector<Monomial> initmon_candidates(const TermOrder& order, int s) {
  const int n = order.n();
  if (s < 1) throw std::invalid_argument("candidate degree must be >= 1");
  std::vector<Variable> pool = diagonal_variables(n);
  for (const Variable& v : band_variables(n)) pool.push_back(v);
  const int m = static_cast<int>(pool.size());
  std::vector<Monomial> out;
  if (s > m) return out;
  for (Mask sel : subsets_lex(m, s)) {
    std::uint32_t diag_indices = 0;
    std::uint32_t band_indices = 0;
    for (int p = 0; p < m; ++p) {
      if (!(sel >> p & 1U)) continue;
      const Variable& v = pool[static_cast<std::size_t>(p)];
      if (v.row == v.col) {
        diag_indices |= 1U << v.row;
      } else {
        band_indices |= (1U << v.row) | (1U << v.col);
      }
    }
    if (diag_indices & band_indices) continue;
    std::vector<Variable> factors;
    for (int p = 0; p < m; ++p) {
      if (sel >> p & 1U) factors.push_back(pool[static_cast<std::size_t>(p)]);
    }
    out.push_back(order.monomial(factors));
  }
  std::sort(out.begin(), out.end(), RevlexGreater{});
  return out;
}

std::vector<IndexSequences> constructive_witnesses(int n, const std::vector<Variable>& factors) {
  std::vector<int> diag;
  std::vector<Variable> band;
  std::uint32_t diag_mask = 0;
  std::uint32_t band_mask = 0;
  for (const Variable& v : factors) {
    switch (classify(v, n)) {
      case VariableClass::Diagonal:
        diag.push_back(v.row);
        diag_mask |= 1U << v.row;
        break;
      case VariableClass::Band:
        band.push_back(v);
        band_mask |= (1U << v.row) | (1U << v.col);
        break;
      case VariableClass::Other:
        return {};
    }
  }
  if (diag_mask & band_mask) return {};
  std::sort(diag.begin(), diag.end());
  if (std::adjacent_find(diag.begin(), diag.end()) != diag.end()) return {};
  std::sort(band.begin(), band.end());
  if (std::adjacent_find(band.begin(), band.end()) != band.end()) return {};

  const std::size_t s = band.size();
  // Leading chain x12, x13, x24, ..., x_{r-1,r+1}.
  std::size_t low = 0;
  if (s >= 2 && band[0] == Variable(1, 2) && band[1] == Variable(1, 3)) {
    low = 2;
    while (low < s && band[low] == Variable(static_cast<int>(low), static_cast<int>(low) + 2)) ++low;
  }
  // Trailing chain x_{n-q,n-q+2}, ..., x_{n-2,n}, x_{n-1,n}.
  std::size_t high = 0;
  if (s >= 2 && band[s - 1] == Variable(n - 1, n) && band[s - 2] == Variable(n - 2, n)) {
    high = 2;
    while (high < s - low &&
           band[s - 1 - high] == Variable(n - 1 - static_cast<int>(high), n + 1 - static_cast<int>(high))) {
      ++high;
    }
  }
  if (low + high > s) return {};

  // Blocks of the band part: the leading chain, each middle entry, the
  // trailing chain. Any block may be transposed without changing its index
  // set; variant 0 keeps the orientation described above.
  std::vector<IndexSequences> blocks;
  if (low > 0) {
    const int r = static_cast<int>(low);
    IndexSequences part = special_indices_low(r / 2, r % 2 ? Parity::Odd : Parity::Even);
    if (*std::max_element(part.rows.begin(), part.rows.end()) > r) std::swap(part.rows, part.cols);
    blocks.push_back(std::move(part));
  }
  for (std::size_t i = low; i < s - high; ++i) blocks.push_back(IndexSequences{{band[i].row}, {band[i].col}});
  if (high > 0) {
    const int q = static_cast<int>(high);
    IndexSequences part = special_indices_high(q / 2, q % 2 ? Parity::Odd : Parity::Even, n);
    if (*std::min_element(part.cols.begin(), part.cols.end()) < n - q + 1) std::swap(part.rows, part.cols);
    blocks.push_back(std::move(part));
  }

  std::vector<IndexSequences> out;
  for (std::uint32_t flips = 0; flips < (1U << blocks.size()); ++flips) {
    IndexSequences seq{diag, diag};
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const bool t = flips >> b & 1U;
      const auto& rows = t ? blocks[b].cols : blocks[b].rows;
      const auto& cols = t ? blocks[b].rows : blocks[b].cols;
      seq.rows.insert(seq.rows.end(), rows.begin(), rows.end());
      seq.cols.insert(seq.cols.end(), cols.begin(), cols.end());
    }
    if (std::popcount(to_mask(seq.rows)) != static_cast<int>(seq.rows.size()) ||
        std::popcount(to_mask(seq.cols)) != static_cast<int>(seq.cols.size())) {
      continue;  // a transposed block collides with another block
    }
    out.push_back(std::move(seq));
  }
  return out;
}

std::optional<IndexSequences> constructive_witness(int n, const std::vector<Variable>& factors) {
  auto all = constructive_witnesses(n, factors);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::vector<BandMonomialWitness> witness_leading_terms(const Polynomial::OrderPtr& order, int s,
                                                       WitnessStrategy strategy, Execution exec) {
  const int n = order->n();
  if (s < 1 || s > n - 2) throw std::invalid_argument("witness degree must satisfy 1 <= s <= n-2");
  const std::vector<Monomial> candidates = initmon_candidates(*order, s);
  std::vector<std::optional<MinorSpec>> found(candidates.size());

  if (strategy == WitnessStrategy::ExhaustiveScan) {
    std::unordered_map<Monomial, std::size_t, MonomialHash> slot;
    for (std::size_t i = 0; i < candidates.size(); ++i) slot.emplace(candidates[i], i);
    auto record = [&](const MinorSpec& spec, const Term& lt) {
      auto it = slot.find(lt.monomial);
      if (it != slot.end() && !found[it->second]) found[it->second] = spec;
    };
    if (s == 1) {
      // 1x1 minors are the variables themselves.
      for (const Variable& v : order->priority()) record(MinorSpec{n, {v.row}, {v.col}}, Term{order->monomial({v}), 1});
    } else {
      for (const MinorEntry& e : all_minors(order, s, exec)) {
        if (!e.poly.is_zero()) record(e.spec, e.poly.leading_term());
      }
    }
  } else {
    const long count = static_cast<long>(candidates.size());
    auto build = [&](long i) {
      const Monomial& m = candidates[static_cast<std::size_t>(i)];
      for (const IndexSequences& seq : constructive_witnesses(n, order->factors(m))) {
        const Polynomial p = minor_polynomial(order, seq.rows, seq.cols);
        if (p.is_zero() || !(p.leading_term().monomial == m)) continue;
        std::vector<int> rows = seq.rows;
        std::vector<int> cols = seq.cols;
        std::sort(rows.begin(), rows.end());
        std::sort(cols.begin(), cols.end());
        found[static_cast<std::size_t>(i)] = make_minor_spec(n, rows, cols);
        return;
      }
    };
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < count; ++i) build(i);
    } else {
      for (long i = 0; i < count; ++i) build(i);
    }
  }

  std::vector<BandMonomialWitness> out;
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (found[i]) {
      out.push_back(BandMonomialWitness{candidates[i], *found[i]});
    } else {
      missing.push_back(order->format(candidates[i]));
    }
  }
  if (!missing.empty()) {
    const std::string what =
        "no " + std::to_string(s) + "-minor leads with " + std::to_string(missing.size()) + " candidate monomial(s)";
    throw CounterexampleError(what, std::move(missing));
  }
  return out;
}

std::string format_minor_line(const MinorEntry& entry) {
  std::string out = "rows=" + join(entry.spec.rows) + "; cols=" + join(entry.spec.cols) + "; ";
  if (entry.poly.is_zero()) return out + "lt=0; lc=0";
  const Term& lt = entry.poly.leading_term();
  std::string lc = format_rational(lt.coeff);
  if (sgn(lt.coeff) > 0) lc = "+" + lc;
  return out + "lt=" + entry.poly.order().format(lt.monomial) + "; lc=" + lc;
}

}  // namespace symgor
