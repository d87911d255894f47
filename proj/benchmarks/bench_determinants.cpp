#include <benchmark/benchmark.h>

#include <random>

#include "iwagraph/char_element.hpp"
#include "iwagraph/complexity.hpp"
#include "iwagraph/voltage.hpp"

using namespace iwagraph;

namespace {

// Layer of the unit-weight triangle tower: a 3 * 2^n cycle.
WeightedGraph triangle_layer(std::uint32_t n) {
  WeightedGraph k3;
  for (int i = 0; i < 3; ++i) k3.add_vertex("v" + std::to_string(i));
  k3.add_edge(0, 1, Rational(1));
  k3.add_edge(1, 2, Rational(1));
  k3.add_edge(2, 0, Rational(1));
  ZdVoltage alpha(1, {{0}, {0}, {1}});
  return tower_layer(k3, alpha, 2, n).graph;
}

}  // namespace

static void BM_bareiss_kappa(benchmark::State& state) {
  WeightedGraph layer = triangle_layer(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kappa_matrix_tree(layer));
  state.SetLabel(std::to_string(layer.vertex_count()) + " vertices");
}
BENCHMARK(BM_bareiss_kappa)->DenseRange(1, 5);

static void BM_laurent_determinant(benchmark::State& state) {
  // m x m voltage graph determinant over the Laurent ring, d = 2.
  int m = static_cast<int>(state.range(0));
  WeightedGraph g;
  for (int i = 0; i < m; ++i) g.add_vertex("v" + std::to_string(i));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> volt(-2, 2);
  std::vector<Exponents> voltages;
  for (int i = 0; i < m; ++i) {
    g.add_edge(i, (i + 1) % m, Rational(1));
    voltages.push_back({volt(rng), volt(rng)});
  }
  for (int i = 0; i < m; ++i) {
    g.add_edge(i, i, Rational(2));
    voltages.push_back({volt(rng), volt(rng)});
  }
  ZdVoltage alpha(2, voltages);
  for (auto _ : state)
    benchmark::DoNotOptimize(char_element_direct(g, alpha, 2).poly.term_count());
}
BENCHMARK(BM_laurent_determinant)->DenseRange(2, 6);

static void BM_cyclotomic_h_value(benchmark::State& state) {
  WeightedGraph k3;
  for (int i = 0; i < 3; ++i) k3.add_vertex("v" + std::to_string(i));
  k3.add_edge(0, 1, Rational(2));
  k3.add_edge(1, 2, Rational(3));
  k3.add_edge(2, 0, Rational(5));
  std::uint32_t order = 1u << state.range(0);
  FiniteGroup g = FiniteGroup::abelian({order});
  FiniteVoltage alpha{{1, 0, order - 1}};
  Character psi(g, 2, {1});
  for (auto _ : state) benchmark::DoNotOptimize(h_value(k3, g, alpha, psi).is_zero());
}
BENCHMARK(BM_cyclotomic_h_value)->DenseRange(1, 4);
