#include "symgor/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace symgor {

namespace {

using Json = nlohmann::ordered_json;

Json lemma_json(const LemmaResult& l) {
  Json j;
  j["name"] = l.name;
  j["instances"] = l.instances;
  if (l.fallbacks) j["fallbacks"] = l.fallbacks;
  j["verdict"] = l.pass() ? "pass" : "fail";
  j["counterexamples"] = l.counterexamples;
  return j;
}

Json invariant_fields(const InvariantReport& inv) {
  Json j;
  j["dim"] = inv.dim;
  j["multiplicity"] = inv.multiplicity.get_str();
  j["regularity"] = inv.regularity;
  j["a_invariant"] = inv.a_invariant;
  j["gorenstein"] = inv.gorenstein;
  return j;
}

}  // namespace

std::string report_json(const VerificationReport& rep, bool stable) {
  Json j;
  j["schema"] = 1;
  j["n"] = rep.n;
  j["verdict"] = rep.pass() ? "pass" : "fail";

  Json checks = Json::object();
  for (const CheckResult& c : rep.checks) {
    Json e;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    if (!c.counterexample.empty()) e["counterexample"] = c.counterexample;
    if (!stable) e["elapsed_ms"] = c.elapsed_ms;
    checks[c.name] = std::move(e);
  }
  j["checks"] = std::move(checks);

  Json counts;
  counts["minors"] = rep.counts.minors;
  counts["initial_gens"] = rep.counts.initial_gens;
  counts["facets"] = rep.counts.facets;
  counts["cone_points"] = rep.counts.cone_points;
  j["counts"] = std::move(counts);

  Json gb;
  gb["route"] = rep.groebner_route;
  if (rep.groebner) {
    gb["pairs_total"] = rep.groebner->pairs_total;
    gb["pairs_pruned"] = rep.groebner->pairs_pruned;
    gb["pairs_chain_skipped"] = rep.groebner->pairs_chain_skipped;
    gb["pairs_reduced"] = rep.groebner->pairs_reduced;
    gb["verdict"] = rep.groebner->pass ? "pass" : "fail";
    if (!stable) gb["elapsed_ms"] = rep.groebner->elapsed_ms;
  } else if (const CheckResult* c = rep.check("groebner")) {
    gb["verdict"] = to_string(c->status);
  }
  j["groebner"] = std::move(gb);

  j["invariants"] = invariant_fields(rep.invariants);
  j["h_vector"] = rep.h_vector;
  j["betti"] = rep.betti ? Json::parse(rep.betti->to_json()) : Json(nullptr);

  Json lemmas = Json::array();
  for (const LemmaResult& l : rep.lemmas) lemmas.push_back(lemma_json(l));
  j["lemmas"] = std::move(lemmas);

  if (!stable) j["elapsed_ms"] = rep.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& rep, bool stable) {
  std::ostringstream os;
  os << "n = " << rep.n << "  (" << rep.counts.minors << " minors, " << rep.counts.initial_gens
     << " initial generators, " << rep.counts.facets << " facets, " << rep.counts.cone_points << " cone points)\n";
  for (const CheckResult& c : rep.checks) {
    os << "  " << std::left << std::setw(32) << c.name << std::setw(8) << to_string(c.status) << c.detail;
    if (!stable && c.status != CheckStatus::Skipped) {
      os << "  [" << std::fixed << std::setprecision(1) << c.elapsed_ms << " ms]";
    }
    os << "\n";
    for (const auto& line : c.counterexample) os << "      " << line << "\n";
  }
  if (rep.betti) os << "\nbetti table:\n" << rep.betti->to_text();
  os << (rep.pass() ? "PASS" : "FAIL");
  if (!stable) os << "  (" << std::fixed << std::setprecision(1) << rep.elapsed_ms << " ms)";
  os << "\n";
  return os.str();
}

std::string lemmas_json(int n, const std::vector<LemmaResult>& results) {
  Json j;
  j["schema"] = 1;
  j["n"] = n;
  bool ok = true;
  Json list = Json::array();
  for (const LemmaResult& l : results) {
    ok = ok && l.pass();
    list.push_back(lemma_json(l));
  }
  j["verdict"] = ok ? "pass" : "fail";
  j["lemmas"] = std::move(list);
  return j.dump(2) + "\n";
}

std::string lemmas_text(int n, const std::vector<LemmaResult>& results) {
  std::ostringstream os;
  os << "n = " << n << "\n";
  bool ok = true;
  for (const LemmaResult& l : results) {
    ok = ok && l.pass();
    os << "  " << std::left << std::setw(32) << l.name << std::setw(8) << (l.pass() ? "pass" : "fail") << l.instances
       << " instances";
    if (l.fallbacks) os << " (" << l.fallbacks << " via a transposed variant)";
    os << "\n";
    for (const auto& ce : l.counterexamples) os << "      " << ce << "\n";
  }
  os << (ok ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string invariants_json(int n, int t, const InvariantReport& inv) {
  Json j;
  j["schema"] = 1;
  j["n"] = n;
  j["t"] = t;
  const Json fields = invariant_fields(inv);
  for (const auto& [key, value] : fields.items()) j[key] = value;
  return j.dump(2) + "\n";
}

std::string invariants_text(int n, int t, const InvariantReport& inv) {
  std::ostringstream os;
  os << "n=" << n << " t=" << t << "\n"
     << "  dim          " << inv.dim << "\n"
     << "  multiplicity " << inv.multiplicity.get_str() << "\n"
     << "  regularity   " << inv.regularity << "\n"
     << "  a-invariant  " << inv.a_invariant << "\n"
     << "  gorenstein   " << (inv.gorenstein ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace symgor
