// symgor: checks the Groebner and Stanley-Reisner description of the ideal
// of (n-2)-minors of a generic symmetric n x n matrix.
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "symgor/betti.hpp"
#include "symgor/complexes.hpp"
#include "symgor/execution.hpp"
#include "symgor/groebner.hpp"
#include "symgor/minors.hpp"
#include "symgor/report.hpp"
#include "symgor/verify.hpp"

namespace {

constexpr int kCheckFailure = 1;
constexpr int kUsageError = 2;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    f << text;
  }
};

std::string dump(const std::string& what, int n, bool json) {
  using namespace symgor;
  auto order = std::make_shared<const TermOrder>(make_term_order(n));
  if (what == "betti") {
    if (n < 5) throw std::invalid_argument("betti dump needs n >= 5");
    std::vector<Polynomial> polys;
    for (auto& e : all_minors(order, n - 2)) polys.push_back(std::move(e.poly));
    HochsterOptions opt;
    opt.max_support = std::max<std::size_t>(opt.max_support, 2 * static_cast<std::size_t>(n));
    const BettiTable t = hochster_betti(initial_ideal(polys), opt);
    return json ? t.to_json() + "\n" : t.to_text();
  }
  const auto minors = all_minors(order, n - 2);
  std::string out;
  if (what == "minors") {
    for (const auto& e : minors) out += format_minor_line(e) + "\n";
    return out;
  }
  std::vector<Polynomial> polys;
  for (const auto& e : minors) polys.push_back(e.poly);
  const MonomialIdeal in = initial_ideal(polys);
  if (what == "initial") {
    for (const Monomial& g : in.generators()) out += order->format(g) + "\n";
    return out;
  }
  // complex: facets on D ∪ U, the other variables being cone points
  const std::vector<Variable> cycle = band_cycle_graph(n);
  std::vector<std::string> labels;
  for (const Variable& v : cycle) labels.push_back(v.name());
  return to_cycle_labels(complex_of_ideal(in), *order).to_string(labels);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner basis and Stanley-Reisner checks for symmetric (n-2)-minors"};
  app.require_subcommand(1);
  Output output;
  app.add_option("--out", output.path, "Write the report to a file instead of stdout");
  int workers = 0;
  app.add_option("--workers", workers, "OpenMP worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

  int n = 0;
  bool json = false;
  bool stable = false;
  symgor::VerifyOptions vopt;

  auto* verify = app.add_subcommand("verify", "Run the full check pipeline");
  verify->add_option("--n", n, "Matrix size")->required();
  verify->add_flag("--force-gb", vopt.force_gb, "Run the minors and Buchberger's criterion at any n");
  verify->add_flag("--force-betti", vopt.force_betti, "Run Hochster's formula at n >= 7");
  verify->add_flag("--skip-betti", vopt.skip_betti, "Skip Hochster's formula");
  verify->add_flag("--chain", vopt.chain_criterion, "Skip S-pairs covered by the chain criterion");
  verify->add_flag("--skip-lemmas", vopt.skip_lemmas, "Skip the leading-term suite");
  verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--stable-output", stable, "Omit timings");
  verify->add_option("--workers", workers, "OpenMP worker threads")->check(CLI::NonNegativeNumber);
  verify->add_option("--out", output.path, "Output file");

  auto* lemmas = app.add_subcommand("lemmas", "Check the leading-term claims");
  lemmas->add_option("--n", n, "Matrix size")->required();
  lemmas->add_flag("--json", json, "JSON report");
  lemmas->add_option("--workers", workers, "OpenMP worker threads")->check(CLI::NonNegativeNumber);
  lemmas->add_option("--out", output.path, "Output file");

  std::string what;
  auto* dumpcmd = app.add_subcommand("dump", "Print minors, initial ideal, complex or Betti table");
  dumpcmd->add_option("what", what, "minors|initial|complex|betti")
      ->required()
      ->check(CLI::IsMember({"minors", "initial", "complex", "betti"}));
  dumpcmd->add_option("--n", n, "Matrix size")->required();
  dumpcmd->add_flag("--json", json, "JSON (betti only)");
  dumpcmd->add_option("--workers", workers, "OpenMP worker threads")->check(CLI::NonNegativeNumber);
  dumpcmd->add_option("--out", output.path, "Output file");

  int t = 0;
  auto* inv = app.add_subcommand("invariants", "Closed-form invariants of the t-minors");
  inv->add_option("--n", n, "Matrix size")->required();
  inv->add_option("--t", t, "Minor size")->required();
  inv->add_flag("--json", json, "JSON report");
  inv->add_option("--out", output.path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    symgor::set_worker_count(workers);
    if (*verify) {
      const auto rep = symgor::run_verification(n, vopt);
      output.write(json ? symgor::report_json(rep, stable) : symgor::report_text(rep, stable));
      return rep.pass() ? 0 : kCheckFailure;
    }
    if (*lemmas) {
      if (n < 5) throw std::invalid_argument("lemma suite needs n >= 5");
      const auto results = symgor::lemma_suite(n);
      output.write(json ? symgor::lemmas_json(n, results) : symgor::lemmas_text(n, results));
      for (const auto& l : results) {
        if (!l.pass()) return kCheckFailure;
      }
      return 0;
    }
    if (*dumpcmd) {
      output.write(dump(what, n, json));
      return 0;
    }
    if (*inv) {
      const auto r = symgor::determinantal_invariants(n, t);
      output.write(json ? symgor::invariants_json(n, t, r) : symgor::invariants_text(n, t, r));
      return 0;
    }
  } catch (const symgor::CounterexampleError& e) {
    std::cerr << "counterexample: " << e.what() << "\n";
    for (const auto& line : e.payload()) std::cerr << "  " << line << "\n";
    return kCheckFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
  return kUsageError;
}
