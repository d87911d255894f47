#include <benchmark/benchmark.h>

#include "iwagraph/invariants.hpp"

using namespace iwagraph;

namespace {

WeightedGraph bouquet2() {
  WeightedGraph g;
  int v = g.add_vertex("v");
  g.add_edge(v, v, Rational(1));
  g.add_edge(v, v, Rational(1));
  return g;
}

}  // namespace

static void BM_tower_report_d1(benchmark::State& state) {
  WeightedGraph g = bouquet2();
  ZdVoltage alpha(1, {{1}, {1}});
  std::uint32_t nmax = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(tower_report(g, alpha, 2, nmax).closed_form_ok);
}
BENCHMARK(BM_tower_report_d1)->DenseRange(2, 5);

static void BM_valuation_sum_orbits(benchmark::State& state) {
  // Orbit-reduced evaluation sums at growing layer depth.
  WeightedGraph g = bouquet2();
  ZdVoltage alpha(2, {{1, 0}, {0, 1}});
  CharElement q = char_element_direct(g, alpha, 2);
  std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(valuation_sum(q, n).sum == 0);
}
BENCHMARK(BM_valuation_sum_orbits)->DenseRange(2, 6);

static void BM_valuation_sum_jobs(benchmark::State& state) {
  WeightedGraph g = bouquet2();
  ZdVoltage alpha(2, {{1, 0}, {0, 1}});
  CharElement q = char_element_direct(g, alpha, 2);
  int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(valuation_sum(q, 6, jobs).sum == 0);
}
BENCHMARK(BM_valuation_sum_jobs)->Arg(1)->Arg(2)->Arg(4);
