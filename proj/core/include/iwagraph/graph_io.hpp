#pragma once

#include <cstdint>
#include <string>

#include "iwagraph/voltage.hpp"

namespace iwagraph {

// A graph file: weighted symmetric digraph plus its Z^d voltage and the tower
// prime.  Each edge record lists one dart per involution pair; the reverse
// weight defaults to the forward one.
struct GraphBundle {
  WeightedGraph graph;
  ZdVoltage alpha{1, {}};
  std::uint32_t p = 2;
  int d = 1;
};

GraphBundle parse_graph_json(const std::string& text);
GraphBundle load_graph_file(const std::string& path);
std::string graph_to_json(const GraphBundle& bundle);

// A finite-group voltage file: the group (built-in name or explicit table)
// and one element per edge id.
struct BetaBundle {
  FiniteGroup group = FiniteGroup::abelian({1});
  FiniteVoltage beta;
};

BetaBundle parse_beta_json(const std::string& text, const WeightedGraph& graph);
BetaBundle load_beta_file(const std::string& path, const WeightedGraph& graph);

}  // namespace iwagraph
