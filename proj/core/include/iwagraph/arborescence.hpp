#pragma once

#include <vector>

#include "iwagraph/graph.hpp"

namespace iwagraph {

struct ArborescenceList {
  // Each arborescence as the darts chosen (one incoming dart per non-root
  // vertex), with its weight product.
  std::vector<std::pair<std::vector<int>, Rational>> trees;
  Rational weight_sum;  // the weighted complexity by definition
};

// Exhaustive enumeration of spanning arborescences rooted at `root` (every
// non-root vertex reachable from the root along tree darts).  Exponential;
// rejects graphs with more than 12 vertices.
ArborescenceList enumerate_arborescences(const WeightedGraph& g, int root);

}  // namespace iwagraph
