#include "symgor/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "symgor/complexes.hpp"
#include "symgor/homology.hpp"
#include "symgor/minors.hpp"

namespace symgor {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool unit_coefficient(const Term& t) { return abs(t.coeff) == 1; }

std::string describe(const IndexSequences& seq) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < seq.rows.size(); ++i) os << (i ? "," : "") << seq.rows[i];
  os << "|";
  for (std::size_t i = 0; i < seq.cols.size(); ++i) os << (i ? "," : "") << seq.cols[i];
  os << "]";
  return os.str();
}

MinorSpec canonical(int n, IndexSequences seq) {
  std::sort(seq.rows.begin(), seq.rows.end());
  std::sort(seq.cols.begin(), seq.cols.end());
  return make_minor_spec(n, std::move(seq.rows), std::move(seq.cols));
}

// Leading terms of all canonical minors of size <= n-2. Row/column
// permutations only flip the sign, so lookups go through canonical().
class LeadingTermTable {
 public:
  LeadingTermTable(const Polynomial::OrderPtr& order, Execution exec) : order_(order), eval_(order) {
    const int n = order->n();
    scan_minor_leading_terms(
        order, n - 2, [&](int, const MinorSpec& spec, const Term& lt) { table_.emplace(spec, lt); }, exec);
  }

  // nullopt for a vanishing minor.
  std::optional<Term> lookup(const IndexSequences& seq) {
    const MinorSpec spec = canonical(order_->n(), seq);
    if (static_cast<int>(spec.size()) <= order_->n() - 2) {
      auto it = table_.find(spec);
      if (it == table_.end()) return std::nullopt;
      return it->second;
    }
    const Polynomial& p = eval_.minor(spec);
    if (p.is_zero()) return std::nullopt;
    return p.leading_term();
  }

  const std::map<MinorSpec, Term>& table() const { return table_; }

 private:
  Polynomial::OrderPtr order_;
  MinorEvaluator eval_;
  std::map<MinorSpec, Term> table_;
};

void expect_leading(LemmaResult& out, LeadingTermTable& lts, const TermOrder& order, const IndexSequences& seq,
                    const Monomial& claimed) {
  ++out.instances;
  const auto lt = lts.lookup(seq);
  if (!lt) {
    out.counterexamples.push_back(describe(seq) + " vanishes; expected " + order.format(claimed));
  } else if (!(lt->monomial == claimed) || !unit_coefficient(*lt)) {
    out.counterexamples.push_back(describe(seq) + " leads with " + format_rational(lt->coeff) + "·" +
                                  order.format(lt->monomial) + "; expected " + order.format(claimed));
  }
}

// Sequences (alpha_1, beta_1), ..., (alpha_s, beta_s) of band entries with
// both coordinates strictly increasing. Each band entry may be read in
// either orientation.
LemmaResult band_sequences(LeadingTermTable& lts, const TermOrder& order) {
  LemmaResult out{"band_sequences", 0, {}};
  const int n = order.n();
  const std::vector<Variable> band = band_variables(n);
  const std::size_t nb = band.size();
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << nb); ++subset) {
    const int s = std::popcount(subset);
    if (s > n - 2) continue;
    std::vector<Variable> chosen;
    for (std::size_t i = 0; i < nb; ++i) {
      if (subset >> i & 1U) chosen.push_back(band[i]);
    }
    for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << s); ++flips) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < s; ++i) {
        const Variable& v = chosen[static_cast<std::size_t>(i)];
        pairs.emplace_back((flips >> i & 1U) ? std::pair{v.col, v.row} : std::pair{v.row, v.col});
      }
      std::sort(pairs.begin(), pairs.end());
      bool increasing = true;
      for (std::size_t i = 1; i < pairs.size() && increasing; ++i) {
        increasing = pairs[i - 1].first < pairs[i].first && pairs[i - 1].second < pairs[i].second;
      }
      if (!increasing) continue;
      IndexSequences seq;
      for (const auto& [a, b] : pairs) {
        seq.rows.push_back(a);
        seq.cols.push_back(b);
      }
      expect_leading(out, lts, order, seq, order.monomial(chosen));
    }
  }
  return out;
}

LemmaResult staircase_low(LeadingTermTable& lts, const TermOrder& order) {
  LemmaResult out{"staircase_low", 0, {}};
  const int n = order.n();
  for (int ell = 1; 2 * ell <= n - 2; ++ell) {
    const auto seq = special_indices_low(ell, Parity::Odd);
    expect_leading(out, lts, order, seq, order.monomial(staircase_leading_factors_low(seq.rows.size())));
  }
  for (int ell = 1; 2 * ell <= n - 3; ++ell) {
    const auto seq = special_indices_low(ell, Parity::Even);
    expect_leading(out, lts, order, seq, order.monomial(staircase_leading_factors_low(seq.rows.size())));
  }
  return out;
}

LemmaResult staircase_high(LeadingTermTable& lts, const TermOrder& order) {
  LemmaResult out{"staircase_high", 0, {}};
  const int n = order.n();
  for (int ell = 1; 2 * ell <= n - 3; ++ell) {
    const auto seq = special_indices_high(ell, Parity::Odd, n);
    expect_leading(out, lts, order, seq, order.monomial(staircase_leading_factors_high(seq.rows.size(), n)));
  }
  for (int ell = 1; 2 * ell <= n - 2; ++ell) {
    const auto seq = special_indices_high(ell, Parity::Even, n);
    expect_leading(out, lts, order, seq, order.monomial(staircase_leading_factors_high(seq.rows.size(), n)));
  }
  return out;
}

LemmaResult candidates_by_scan(const LeadingTermTable& lts, const TermOrder& order) {
  LemmaResult out{"initial_monomials_scan", 0, {}};
  const int n = order.n();
  std::vector<std::unordered_set<Monomial, MonomialHash>> leading(static_cast<std::size_t>(n - 1));
  for (const auto& [spec, lt] : lts.table()) leading[spec.size()].insert(lt.monomial);
  for (int s = 1; s <= n - 2; ++s) {
    for (const Monomial& m : initmon_candidates(order, s)) {
      ++out.instances;
      if (!leading[static_cast<std::size_t>(s)].contains(m)) {
        out.counterexamples.push_back("no " + std::to_string(s) + "-minor leads with " + order.format(m));
      }
    }
  }
  return out;
}

LemmaResult candidates_by_construction(LeadingTermTable& lts, const TermOrder& order) {
  LemmaResult out{"initial_monomials_constructive", 0, {}};
  const int n = order.n();
  for (int s = 1; s <= n - 2; ++s) {
    for (const Monomial& m : initmon_candidates(order, s)) {
      ++out.instances;
      const auto variants = constructive_witnesses(n, order.factors(m));
      std::size_t tried = 0;
      bool hit = false;
      for (const IndexSequences& seq : variants) {
        ++tried;
        const auto lt = lts.lookup(seq);
        if (lt && lt->monomial == m && unit_coefficient(*lt)) {
          hit = true;
          break;
        }
      }
      if (tried > 1) ++out.fallbacks;
      if (!hit) out.counterexamples.push_back("no construction leads with " + order.format(m));
    }
  }
  return out;
}

LemmaResult unit_leading_coefficients(const LeadingTermTable& lts) {
  LemmaResult out{"unit_leading_coefficients", 0, {}};
  for (const auto& [spec, lt] : lts.table()) {
    ++out.instances;
    if (!unit_coefficient(lt)) out.counterexamples.push_back(spec.to_string() + " lc=" + format_rational(lt.coeff));
  }
  return out;
}

CheckResult make_check(std::string name) {
  CheckResult c;
  c.name = std::move(name);
  return c;
}

void set(CheckResult& c, bool ok, std::string detail) {
  c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  c.detail = std::move(detail);
}

void skip(CheckResult& c, std::string why) {
  c.status = CheckStatus::Skipped;
  c.detail = std::move(why);
}

template <class T>
std::string join_values(const std::vector<T>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// Stanley-Reisner ideal of the matching complex on the band cycle, written
// on the slots of `order`; variables off the cycle are cone points.
MonomialIdeal cycle_ideal_in_slots(const TermOrder& order, const std::vector<Variable>& cycle,
                                   const SimplicialComplex& matching) {
  std::vector<Monomial> gens;
  for (VertexSet s : minimal_nonfaces(matching)) {
    Monomial m;
    for (std::size_t p = 0; p < cycle.size(); ++p) {
      if (s >> p & 1U) m *= Monomial::variable(order.rank(cycle[p]));
    }
    gens.push_back(m);
  }
  return MonomialIdeal(order.num_variables(), std::move(gens));
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::vector<LemmaResult> lemma_suite(const Polynomial::OrderPtr& order, Execution exec) {
  LeadingTermTable lts(order, exec);
  std::vector<LemmaResult> out;
  out.push_back(band_sequences(lts, *order));
  out.push_back(staircase_low(lts, *order));
  out.push_back(staircase_high(lts, *order));
  out.push_back(candidates_by_scan(lts, *order));
  out.push_back(candidates_by_construction(lts, *order));
  out.push_back(unit_leading_coefficients(lts));
  return out;
}

std::vector<LemmaResult> lemma_suite(int n, Execution exec) {
  return lemma_suite(std::make_shared<const TermOrder>(make_term_order(n)), exec);
}

bool VerificationReport::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* VerificationReport::check(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport run_verification(int n, const VerifyOptions& options) {
  if (n < 5 || n > 10) throw std::invalid_argument("verification needs 5 <= n <= 10");
  const auto start = Clock::now();
  auto order = std::make_shared<const TermOrder>(options.tail.empty() ? make_term_order(n)
                                                                      : make_term_order(n, options.tail));
  VerificationReport rep;
  rep.n = n;
  rep.invariants = determinantal_invariants(n, n - 2);

  const bool use_minors = n <= 7 || options.force_gb;
  const bool full_gb = n <= 6 || options.force_gb;
  const bool run_betti = !options.skip_betti && (n <= 6 || options.force_betti);

  CheckResult groebner = make_check("groebner");
  CheckResult square_free = make_check("square_free");
  CheckResult equals_sr = make_check("initial_equals_stanley_reisner");
  CheckResult gale = make_check("gale_matching");
  CheckResult nonfaces = make_check("nonfaces");
  CheckResult invariants = make_check("invariants");
  CheckResult hvec = make_check("h_vector");
  CheckResult sphere = make_check("sphere");
  CheckResult betti = make_check("betti");
  CheckResult lemmas = make_check("lemma_suite");

  const std::vector<Variable> cycle = band_cycle_graph(n);
  rep.cycle_labeling = cycle;
  const int m = 2 * n;
  const int r = n - 3;
  const SimplicialComplex matching = matching_complex_facets(m, r);
  const MonomialIdeal sr_slots = cycle_ideal_in_slots(*order, cycle, matching);
  rep.counts.facets = matching.facets().size();
  rep.counts.cone_points = order->num_variables() - cycle.size();

  // (1)-(4): minors, Groebner property, initial ideal, cone complex.
  std::vector<MinorEntry> minors;
  std::vector<Polynomial> polys;
  if (use_minors) {
    minors = all_minors(order, n - 2, options.exec);
    rep.counts.minors = minors.size();
    for (const auto& e : minors) polys.push_back(e.poly);
  }

  if (!use_minors) {
    rep.groebner_route = "skipped";
    skip(groebner, "n >= 8 without --force-gb");
  } else if (full_gb) {
    rep.groebner_route = "buchberger";
    auto t0 = Clock::now();
    GroebnerOptions gopt;
    gopt.chain_criterion = options.chain_criterion;
    gopt.exec = options.exec;
    GroebnerReport g = verify_groebner(polys, gopt);
    groebner.elapsed_ms = since(t0);
    std::ostringstream os;
    os << g.pairs_total << " pairs, " << g.pairs_pruned << " coprime, " << g.pairs_chain_skipped << " chain, "
       << g.pairs_reduced << " reduced to zero";
    set(groebner, g.pass, os.str());
    if (g.failure) {
      groebner.counterexample = {minors[g.failure->first].spec.to_string(), minors[g.failure->second].spec.to_string(),
                                 g.failure->normal_form.to_string()};
    }
    rep.groebner = std::move(g);
  } else {
    // The Stanley-Reisner ideal sits inside the leading-term ideal, hence
    // inside the initial ideal. Equal dimension and multiplicity against
    // the determinantal closed forms then forces equality, since a
    // Stanley-Reisner ring of a sphere is Cohen-Macaulay and unmixed.
    rep.groebner_route = "inclusion";
    auto t0 = Clock::now();
    const bool contained = ideal_contains_monomials(polys, sr_slots.generators());
    const DimensionMultiplicity dm = dimension_and_multiplicity(sr_slots);
    const bool same = dm.dimension == rep.invariants.dim && mpz_class(static_cast<long>(dm.multiplicity)) == rep.invariants.multiplicity;
    groebner.elapsed_ms = since(t0);
    set(groebner, contained && same,
        std::string(contained ? "contains" : "misses") + " the " + std::to_string(sr_slots.generators().size()) +
            " Stanley-Reisner generators; dim/e " + (same ? "agree" : "differ"));
  }

  std::optional<SimplicialComplex> cone;
  if (use_minors) {
    auto t0 = Clock::now();
    MonomialIdeal in = initial_ideal(polys);
    rep.counts.initial_gens = in.generators().size();
    bool degree_ok = std::all_of(in.generators().begin(), in.generators().end(),
                                 [&](const Monomial& g) { return g.degree() == static_cast<unsigned>(n - 2); });
    set(square_free, in.is_square_free() && degree_ok,
        std::to_string(in.generators().size()) + " generators" + (in.is_square_free() ? ", all square-free" : ""));
    square_free.elapsed_ms = since(t0);

    t0 = Clock::now();
    const std::vector<Monomial> cand = initmon_candidates(*order, n - 2);
    const bool candidates_match = MonomialIdeal(order->num_variables(), cand) == in;
    const bool sr_match = sr_slots == in;
    bool complex_match = false;
    bool cone_ok = false;
    if (in.is_square_free()) {
      cone = complex_of_ideal(in);
      complex_match = to_cycle_labels(*cone, *order) == matching;
      VertexSet other = 0;
      for (std::size_t s = 0; s < order->num_variables(); ++s) {
        if (classify(order->variable(s), n) == VariableClass::Other) other |= VertexSet{1} << s;
      }
      cone_ok = cone->cone_points() == other;
    }
    std::string detail = std::string("candidates ") + (candidates_match ? "=" : "!=") + ", SR ideal " +
                         (sr_match ? "=" : "!=") + ", complex " + (complex_match ? "=" : "!=") + " M(" +
                         std::to_string(m) + "," + std::to_string(r) + "), " +
                         std::to_string(rep.counts.cone_points) + " cone points" + (cone_ok ? "" : " (mismatch)");
    set(equals_sr, candidates_match && sr_match && complex_match && cone_ok, detail);
    equals_sr.elapsed_ms = since(t0);
    rep.initial = std::move(in);
  } else {
    skip(square_free, "n >= 8 without --force-gb");
    skip(equals_sr, "n >= 8 without --force-gb");
  }

  // (5) Gale evenness and cycle nonfaces.
  {
    auto t0 = Clock::now();
    const bool ok = matching == cyclic_polytope_facets(m, 2 * r);
    set(gale, ok, std::to_string(matching.facets().size()) + " facets" + (ok ? "" : ", Gale facets differ"));
    gale.elapsed_ms = since(t0);
    t0 = Clock::now();
    const bool nf = minimal_nonfaces(matching) == independent_subsets_of_cycle(m, r + 1);
    set(nonfaces, nf, std::to_string(sr_slots.generators().size()) + " minimal nonfaces");
    nonfaces.elapsed_ms = since(t0);
  }

  // (6)-(7) invariants and h-vector.
  const FHVectors fh = f_h_vectors(matching, options.exec);
  rep.h_vector = fh.h;
  {
    auto t0 = Clock::now();
    const InvariantReport& inv = rep.invariants;
    const MonomialIdeal& ideal = rep.initial ? *rep.initial : sr_slots;
    const DimensionMultiplicity dm = dimension_and_multiplicity(ideal);
    const long long closed_dim = static_cast<long long>(n + 4) * (n - 3) / 2;
    mpz_class closed_e;
    mpz_class a, b;
    mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(n + 2), 6);
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + 3), 6);
    closed_e = a + b;
    const int h_reg = h_polynomial_degree(fh.h);
    const bool ok = dm.dimension == inv.dim && mpz_class(static_cast<long>(dm.multiplicity)) == inv.multiplicity &&
                    inv.dim == closed_dim && inv.multiplicity == closed_e && inv.regularity == 2 * (n - 3) &&
                    h_reg == inv.regularity && inv.gorenstein;
    std::ostringstream os;
    os << "dim=" << dm.dimension << " e=" << dm.multiplicity << " reg=" << h_reg << " vs formula (" << inv.dim << ", "
       << inv.multiplicity.get_str() << ", " << inv.regularity << ")";
    set(invariants, ok, os.str());
    invariants.elapsed_ms = since(t0);

    t0 = Clock::now();
    const CompressedProfile prof = compressed_profile(6, r);
    set(hvec, fh.h == prof.h && inv.multiplicity == static_cast<long>(prof.multiplicity_bound), "h=" + join_values(fh.h));
    hvec.elapsed_ms = since(t0);
  }

  if (n <= 7) {
    auto t0 = Clock::now();
    const SphereReport sr = sphere_checks(matching);
    set(sphere, sr.all(), "reduced homology " + join_values(sr.reduced_homology));
    sphere.elapsed_ms = since(t0);
  } else {
    skip(sphere, "n >= 8");
  }

  // (8) Hochster.
  if (!run_betti) {
    skip(betti, options.skip_betti ? "--skip-betti" : "n >= 7 without --force-betti");
  } else {
    auto t0 = Clock::now();
    HochsterOptions hopt;
    hopt.exec = options.exec;
    hopt.max_support = std::max<std::size_t>(hopt.max_support, cycle.size());
    const MonomialIdeal& ideal = rep.initial ? *rep.initial : sr_slots;
    BettiTable table = hochster_betti(ideal, hopt);
    const BettiTable expected = closed_form_betti(n);
    const bool ok = table == expected && table.is_pure() && table.regularity() == 2 * (n - 3);
    set(betti, ok, "reg=" + std::to_string(table.regularity()) + (table == expected ? ", matches closed form" : ""));
    if (!(table == expected)) betti.counterexample = {table.to_json(), expected.to_json()};
    betti.elapsed_ms = since(t0);
    rep.betti = std::move(table);
  }

  // (9) leading-term claims.
  if (options.skip_lemmas) {
    skip(lemmas, "disabled");
  } else {
    auto t0 = Clock::now();
    rep.lemmas = lemma_suite(order, options.exec);
    std::size_t instances = 0;
    bool ok = true;
    for (const LemmaResult& l : rep.lemmas) {
      instances += l.instances;
      ok = ok && l.pass();
      for (const auto& ce : l.counterexamples) lemmas.counterexample.push_back(l.name + ": " + ce);
    }
    set(lemmas, ok, std::to_string(instances) + " instances");
    lemmas.elapsed_ms = since(t0);
  }

  rep.checks = {groebner, square_free, equals_sr, gale, nonfaces, invariants, hvec, sphere, betti, lemmas};
  rep.elapsed_ms = since(start);
  return rep;
}

}  // namespace symgor
