// Serial reference versus OpenMP kernel for each parallel hot spot.
// Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include <memory>

#include "symgor/betti.hpp"
#include "symgor/complexes.hpp"
#include "symgor/groebner.hpp"
#include "symgor/minors.hpp"

using namespace symgor;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

Polynomial::OrderPtr order_for(int n) { return std::make_shared<const TermOrder>(make_term_order(n)); }

std::vector<Polynomial> minors_of(int n) {
  std::vector<Polynomial> out;
  for (auto& e : all_minors(order_for(n), n - 2)) out.push_back(std::move(e.poly));
  return out;
}

void BM_Minors(benchmark::State& state) {
  auto o = order_for(7);
  for (auto _ : state) benchmark::DoNotOptimize(all_minors(o, 5, exec_of(state)));
}

void BM_Groebner(benchmark::State& state) {
  const auto gens = minors_of(5);
  GroebnerOptions opt;
  opt.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_groebner(gens, opt));
}

void BM_Hochster(benchmark::State& state) {
  const MonomialIdeal in = initial_ideal(minors_of(6));
  HochsterOptions opt;
  opt.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(in, opt));
}

void BM_FaceCount(benchmark::State& state) {
  const SimplicialComplex c = matching_complex_facets(16, 5);
  for (auto _ : state) benchmark::DoNotOptimize(f_h_vectors(c, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_Minors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Groebner)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Hochster)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FaceCount)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
