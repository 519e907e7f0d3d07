#include "symgor/groebner.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>

namespace symgor {

MonomialIdeal::MonomialIdeal(std::size_t num_variables, std::vector<Monomial> generators)
    : num_variables_(num_variables) {
  if (num_variables > kMaxVariables) throw std::invalid_argument("too many variables for a monomial ideal");
  const std::uint64_t allowed = num_variables == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_variables) - 1;
  for (const Monomial& m : generators) {
    if (m.is_one()) throw std::invalid_argument("monomial ideal generators must be nonconstant");
    if (m.support_mask() & ~allowed) throw std::invalid_argument("generator uses a variable outside the ring");
  }
  // Sort by degree so a divisor is always seen before its multiples.
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : RevlexGreater{}(a, b);
  });
  for (const Monomial& m : generators) {
    const bool redundant = std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) generators_.push_back(m);
  }
  std::sort(generators_.begin(), generators_.end(), RevlexGreater{});
}

bool MonomialIdeal::is_square_free() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Monomial& m) { return m.is_square_free(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::uint64_t MonomialIdeal::support_mask() const {
  std::uint64_t mask = 0;
  for (const Monomial& g : generators_) mask |= g.support_mask();
  return mask;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  const Monomial l = lf.monomial.lcm(lg.monomial);
  return f.mul_term(l / lf.monomial, Rational(1) / lf.coeff) - g.mul_term(l / lg.monomial, Rational(1) / lg.coeff);
}

GroebnerReport verify_groebner(std::span<const Polynomial> gens, const GroebnerOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (gens.empty()) throw std::invalid_argument("Groebner check needs at least one generator");
  for (const Polynomial& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("Groebner check rejects the zero polynomial");
    if (!g.is_homogeneous()) throw std::invalid_argument("Groebner check expects homogeneous generators");
  }
  const std::size_t count = gens.size();
  std::vector<Monomial> leads;
  leads.reserve(count);
  for (const Polynomial& g : gens) leads.push_back(g.leading_term().monomial);

  enum class Status : std::uint8_t { Pending, Coprime, Chain, Zero, Nonzero, Skipped };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(count * (count - 1) / 2);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Status> status(pairs.size(), Status::Pending);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    if (leads[i].coprime(leads[j])) {
      status[p] = Status::Coprime;
      continue;
    }
    if (!options.chain_criterion) continue;
    const Monomial l = leads[i].lcm(leads[j]);
    for (std::size_t k = 0; k < count; ++k) {
      if (k == i || k == j || !leads[k].divides(l)) continue;
      if (leads[i].lcm(leads[k]) == l || leads[j].lcm(leads[k]) == l) continue;
      status[p] = Status::Chain;
      break;
    }
  }

  std::vector<std::optional<Polynomial>> residues(pairs.size());
  std::atomic<std::size_t> first_failure{pairs.size()};
  auto work = [&](std::size_t p) {
    if (status[p] != Status::Pending) return;
    if (p > first_failure.load(std::memory_order_relaxed)) {
      status[p] = Status::Skipped;
      return;
    }
    const auto [i, j] = pairs[p];
    Polynomial r = poly_reduce(s_polynomial(gens[i], gens[j]), gens);
    if (r.is_zero()) {
      status[p] = Status::Zero;
      return;
    }
    status[p] = Status::Nonzero;
    residues[p] = std::move(r);
    std::size_t seen = first_failure.load();
    while (p < seen && !first_failure.compare_exchange_weak(seen, p)) {
    }
  };
  const long total = static_cast<long>(pairs.size());
  if (options.exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long p = 0; p < total; ++p) work(static_cast<std::size_t>(p));
  } else {
    for (long p = 0; p < total; ++p) work(static_cast<std::size_t>(p));
  }

  GroebnerReport report;
  report.generators = count;
  report.pairs_total = pairs.size();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    switch (status[p]) {
      case Status::Coprime: ++report.pairs_pruned; break;
      case Status::Chain: ++report.pairs_chain_skipped; break;
      case Status::Zero: ++report.pairs_reduced; break;
      default: break;
    }
  }
  const std::size_t failed = first_failure.load();
  report.pass = failed == pairs.size();
  if (!report.pass) {
    report.failure = GroebnerFailure{pairs[failed].first, pairs[failed].second, *residues[failed]};
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

MonomialIdeal initial_ideal(std::span<const Polynomial> gens) {
  if (gens.empty()) throw std::invalid_argument("initial ideal of an empty generating set");
  std::vector<Monomial> leads;
  for (const Polynomial& g : gens) leads.push_back(g.leading_term().monomial);
  return MonomialIdeal(gens.front().order().num_variables(), std::move(leads));
}

bool ideal_contains_monomials(std::span<const Polynomial> gens, std::span<const Monomial> probes) {
  std::vector<Monomial> leads;
  for (const Polynomial& g : gens) {
    if (!g.is_zero()) leads.push_back(g.leading_term().monomial);
  }
  return std::all_of(probes.begin(), probes.end(), [&](const Monomial& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  });
}

}  // namespace symgor
