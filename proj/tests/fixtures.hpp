#pragma once

// Shared graph fixtures: the two-loop bouquet, the weighted triangle, and the
// four-loop bouquet, with the voltage assignments used throughout the tests.

#include <random>

#include "iwagraph/graph.hpp"
#include "iwagraph/voltage.hpp"

namespace iwagraph::testfix {

// One vertex, two loops with weights a (edge s1) and b (edge s2).
inline WeightedGraph bouquet2(const Rational& a, const Rational& b) {
  WeightedGraph g;
  int v = g.add_vertex("v");
  g.add_edge(v, v, a, "s1");
  g.add_edge(v, v, b, "s2");
  return g;
}

inline ZdVoltage bouquet2_alpha_d1() { return ZdVoltage(1, {{1}, {1}}); }
inline ZdVoltage bouquet2_alpha_d2() { return ZdVoltage(2, {{1, 0}, {0, 1}}); }

// Triangle with W = [[0,b,a],[b,0,c],[a,c,0]]: s1: v1->v2 (b), s2: v2->v3 (c),
// s3: v3->v1 (a), voltage 1 on s3 only.
inline WeightedGraph triangle(const Rational& b, const Rational& a, const Rational& c) {
  WeightedGraph g;
  int v1 = g.add_vertex("v1");
  int v2 = g.add_vertex("v2");
  int v3 = g.add_vertex("v3");
  g.add_edge(v1, v2, b, "s1");
  g.add_edge(v2, v3, c, "s2");
  g.add_edge(v3, v1, a, "s3");
  return g;
}

inline ZdVoltage triangle_alpha() { return ZdVoltage(1, {{0}, {0}, {1}}); }

// One vertex, four loops a1..a4; s1 and s2 carry the Z^2 voltage.
inline WeightedGraph bouquet4(const Rational& a1, const Rational& a2,
                              const Rational& a3, const Rational& a4) {
  WeightedGraph g;
  int v = g.add_vertex("v");
  g.add_edge(v, v, a1, "s1");
  g.add_edge(v, v, a2, "s2");
  g.add_edge(v, v, a3, "s3");
  g.add_edge(v, v, a4, "s4");
  return g;
}

inline ZdVoltage bouquet4_alpha() {
  return ZdVoltage(2, {{1, 0}, {0, 1}, {0, 0}, {0, 0}});
}

// Random connected graph with strongly symmetric nonzero weights in
// {-2..3} \ {0} and at most max_vertices vertices.
inline WeightedGraph random_connected(std::mt19937& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  int n = nv(rng);
  WeightedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  std::uniform_int_distribution<int> wdist(-2, 3);
  auto weight = [&] {
    int w = 0;
    while (w == 0) w = wdist(rng);
    return Rational(w);
  };
  // Random spanning tree first, then extra edges (loops allowed).
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> prev(0, i - 1);
    g.add_edge(prev(rng), i, weight());
  }
  std::uniform_int_distribution<int> extra(0, 3);
  std::uniform_int_distribution<int> anyv(0, n - 1);
  int extras = extra(rng);
  for (int i = 0; i < extras; ++i) g.add_edge(anyv(rng), anyv(rng), weight());
  return g;
}

inline ZdVoltage random_voltage(std::mt19937& rng, int pairs, int d) {
  std::uniform_int_distribution<int> vdist(-3, 3);
  std::vector<Exponents> per_pair;
  for (int k = 0; k < pairs; ++k) {
    Exponents e(static_cast<std::size_t>(d));
    for (auto& x : e) x = vdist(rng);
    per_pair.push_back(std::move(e));
  }
  return ZdVoltage(d, std::move(per_pair));
}

}  // namespace iwagraph::testfix
