#include "iwagraph/graph.hpp"

#include <algorithm>

#include "iwagraph/errors.hpp"

namespace iwagraph {

int WeightedGraph::add_vertex(std::string name) {
  vertex_names_.push_back(std::move(name));
  return vertex_count() - 1;
}

int WeightedGraph::add_edge(int from, int to, Rational weight, std::string name) {
  Rational rev = weight;
  return add_edge(from, to, std::move(weight), std::move(rev), std::move(name));
}

int WeightedGraph::add_edge(int from, int to, Rational weight, Rational weight_rev,
                            std::string name) {
  if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count())
    throw input_error("add_edge: vertex out of range");
  darts_.push_back({from, to, std::move(weight)});
  darts_.push_back({to, from, std::move(weight_rev)});
  if (name.empty()) name = "e" + std::to_string(pair_count());
  edge_names_.push_back(std::move(name));
  return pair_count() - 1;
}

int WeightedGraph::vertex_index(const std::string& name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  return it == vertex_names_.end()
             ? -1
             : static_cast<int>(it - vertex_names_.begin());
}

int WeightedGraph::edge_index(const std::string& name) const {
  auto it = std::find(edge_names_.begin(), edge_names_.end(), name);
  return it == edge_names_.end() ? -1 : static_cast<int>(it - edge_names_.begin());
}

Matrix<Rational> WeightedGraph::weighted_matrix() const {
  std::size_t m = static_cast<std::size_t>(vertex_count());
  Matrix<Rational> w(m, m);
  for (const Dart& d : darts_)
    w.at(static_cast<std::size_t>(d.origin), static_cast<std::size_t>(d.terminus)) +=
        d.weight;
  return w;
}

Matrix<Rational> WeightedGraph::degree_matrix() const {
  std::size_t m = static_cast<std::size_t>(vertex_count());
  Matrix<Rational> dm(m, m);
  for (const Dart& d : darts_)
    dm.at(static_cast<std::size_t>(d.origin), static_cast<std::size_t>(d.origin)) +=
        d.weight;
  return dm;
}

int WeightedGraph::out_degree(int v) const {
  int n = 0;
  for (const Dart& d : darts_)
    if (d.origin == v) ++n;
  return n;
}

bool WeightedGraph::is_connected() const {
  if (vertex_count() == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Dart& d : darts_) {
      if (d.origin == v && !seen[static_cast<std::size_t>(d.terminus)]) {
        seen[static_cast<std::size_t>(d.terminus)] = 1;
        stack.push_back(d.terminus);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool WeightedGraph::weighted_matrix_symmetric() const {
  Matrix<Rational> w = weighted_matrix();
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = i + 1; j < w.cols(); ++j)
      if (w.at(i, j) != w.at(j, i)) return false;
  return true;
}

std::vector<int> WeightedGraph::default_orientation() const {
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>(pair_count()));
  for (int d = 0; d < dart_count(); d += 2) s.push_back(d);
  return s;
}

ValidationReport validate_graph(const WeightedGraph& g) {
  if (g.vertex_count() == 0) return {false, "graph has no vertices"};
  if (!g.weighted_matrix_symmetric())
    return {false, "weighted matrix is not symmetric"};
  if (!g.is_connected()) return {false, "graph is not connected"};
  return {true, ""};
}

}  // namespace iwagraph
