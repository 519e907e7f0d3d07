#include "symgor/term_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace symgor {

// ---- Monomial ----

Monomial Monomial::variable(std::size_t slot, unsigned exponent) {
  Monomial m;
  m.set_exponent(slot, exponent);
  return m;
}

Monomial Monomial::from_support(std::uint64_t mask) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (mask >> i & 1U) {
      m.exps_[i] = 1;
      ++m.degree_;
    }
  }
  return m;
}

void Monomial::set_exponent(std::size_t slot, unsigned e) {
  if (slot >= kMaxVariables) throw std::out_of_range("monomial slot out of range");
  if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
  degree_ = degree_ - exps_[slot] + e;
  exps_[slot] = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  return (support_mask() & other.support_mask()) == 0;
}

bool Monomial::is_square_free() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e <= 1; });
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0) out.push_back(i);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exps_[i] = std::max(exps_[i], other.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (divisor.exps_[i] > exps_[i]) throw std::domain_error("monomial quotient is not exact");
    m.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  }
  m.degree_ = degree_ - divisor.degree_;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  m *= other;
  return m;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (degree_ + other.degree_ > 255) throw std::overflow_error("monomial degree exceeds 255");
  for (std::size_t i = 0; i < kMaxVariables; ++i) exps_[i] = static_cast<std::uint8_t>(exps_[i] + other.exps_[i]);
  degree_ += other.degree_;
  return *this;
}

std::size_t Monomial::hash() const {
  std::uint64_t w[kMaxVariables / 8];
  std::memcpy(w, exps_.data(), kMaxVariables);
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t x : w) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---- Variables and orders ----

std::string Variable::name() const {
  return "x[" + std::to_string(row) + "][" + std::to_string(col) + "]";
}

VariableClass classify(Variable v, int n) {
  if (v.row == v.col) return VariableClass::Diagonal;
  if (v.col == v.row + 2) return VariableClass::Band;
  if ((v.row == 1 && v.col == 2) || (v.row == n - 1 && v.col == n)) return VariableClass::Band;
  return VariableClass::Other;
}

std::vector<Variable> diagonal_variables(int n) {
  std::vector<Variable> out;
  for (int i = 1; i <= n; ++i) out.emplace_back(i, i);
  return out;
}

std::vector<Variable> band_variables(int n) {
  std::vector<Variable> out;
  for (int i = 1; i + 2 <= n; ++i) out.emplace_back(i, i + 2);
  out.emplace_back(1, 2);
  out.emplace_back(n - 1, n);
  return out;
}

std::vector<Variable> other_variables(int n) {
  std::vector<Variable> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (classify(Variable(i, j), n) == VariableClass::Other) out.emplace_back(i, j);
    }
  }
  return out;
}

TermOrder::TermOrder(int n, std::vector<Variable> priority) : n_(n), priority_(std::move(priority)) {
  const std::size_t expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
  if (n < 1 || expected > kMaxVariables) throw std::invalid_argument("matrix size out of supported range");
  if (priority_.size() != expected) throw std::invalid_argument("priority list must name every matrix entry once");
  rank_table_.assign(static_cast<std::size_t>(n * n), -1);
  for (std::size_t r = 0; r < priority_.size(); ++r) {
    const Variable& v = priority_[r];
    if (v.row < 1 || v.col > n) throw std::invalid_argument("priority list entry out of range");
    int& slot = rank_table_[static_cast<std::size_t>((v.row - 1) * n + (v.col - 1))];
    if (slot != -1) throw std::invalid_argument("priority list repeats " + v.name());
    slot = static_cast<int>(r);
  }
}

std::size_t TermOrder::rank(Variable v) const {
  if (v.row < 1 || v.col > n_) throw std::out_of_range("variable outside the matrix: " + v.name());
  return static_cast<std::size_t>(rank_table_[static_cast<std::size_t>((v.row - 1) * n_ + (v.col - 1))]);
}

Monomial TermOrder::monomial(const std::vector<Variable>& factors) const {
  Monomial m;
  for (const Variable& v : factors) m *= Monomial::variable(rank(v));
  return m;
}

std::vector<Variable> TermOrder::factors(const Monomial& m) const {
  std::vector<Variable> out;
  for (std::size_t r = 0; r < priority_.size(); ++r) {
    for (unsigned e = 0; e < m.exponent(r); ++e) out.push_back(priority_[r]);
  }
  return out;
}

std::string TermOrder::format(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t r = 0; r < priority_.size(); ++r) {
    const unsigned e = m.exponent(r);
    if (e == 0) continue;
    if (!out.empty()) out += "·";
    out += priority_[r].name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

TermOrder make_term_order(int n, const std::vector<Variable>& tail) {
  if (n < 4) throw std::invalid_argument("term order needs n >= 4, got " + std::to_string(n));
  if (static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2 > kMaxVariables) {
    throw std::invalid_argument("term order supports n <= 10, got " + std::to_string(n));
  }
  std::vector<Variable> expected = other_variables(n);
  std::vector<Variable> sorted_tail = tail;
  std::sort(sorted_tail.begin(), sorted_tail.end());
  if (sorted_tail != expected) throw std::invalid_argument("tail must be a permutation of the Other entries");

  std::vector<Variable> priority = diagonal_variables(n);
  for (const Variable& v : band_variables(n)) priority.push_back(v);
  for (const Variable& v : tail) priority.push_back(v);
  return TermOrder(n, std::move(priority));
}

TermOrder make_term_order(int n) {
  if (n < 4) throw std::invalid_argument("term order needs n >= 4, got " + std::to_string(n));
  return make_term_order(n, other_variables(n));
}

}  // namespace symgor
