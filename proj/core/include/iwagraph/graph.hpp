#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iwagraph/matrix.hpp"
#include "iwagraph/rational.hpp"

namespace iwagraph {

// A directed edge.  Darts are stored in involution pairs: darts 2k and 2k+1
// are mutual inverses, which makes the involution fixed-point free and
// o(e) = t(e-bar) structural invariants rather than checked ones.
struct Dart {
  int origin;
  int terminus;
  Rational weight;
};

class WeightedGraph {
 public:
  int add_vertex(std::string name);
  // Adds the involution pair for one undirected edge; reverse weight defaults
  // to the forward weight (strongly symmetric).  Returns the pair index.
  int add_edge(int from, int to, Rational weight, std::string name = "");
  int add_edge(int from, int to, Rational weight, Rational weight_rev,
               std::string name = "");

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int dart_count() const { return static_cast<int>(darts_.size()); }
  int pair_count() const { return dart_count() / 2; }
  static int inverse(int dart) { return dart ^ 1; }
  const Dart& dart(int d) const { return darts_[static_cast<std::size_t>(d)]; }
  const std::string& vertex_name(int v) const {
    return vertex_names_[static_cast<std::size_t>(v)];
  }
  const std::string& edge_name(int pair) const {
    return edge_names_[static_cast<std::size_t>(pair)];
  }
  int vertex_index(const std::string& name) const;  // -1 when absent
  int edge_index(const std::string& name) const;    // -1 when absent

  // |V| - |E|/2 (pairs of darts count once).
  long euler_characteristic() const {
    return static_cast<long>(vertex_count()) - pair_count();
  }

  // W(X)_ij = sum of w(e) over darts i -> j.
  Matrix<Rational> weighted_matrix() const;
  // Diagonal of out-weight sums; always the row sums of W(X).
  Matrix<Rational> degree_matrix() const;
  // Number of darts leaving v.
  int out_degree(int v) const;

  bool is_connected() const;
  bool weighted_matrix_symmetric() const;

  // Darts 0, 2, 4, ...: one per involution pair.
  std::vector<int> default_orientation() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;  // one per pair
  std::vector<Dart> darts_;
};

struct ValidationReport {
  bool ok = true;
  std::string failure;  // first violated axiom when !ok
};

// Involution axioms hold by construction; this checks the weighted-matrix
// symmetry assumption and connectivity, reporting the first failure.
ValidationReport validate_graph(const WeightedGraph& g);

}  // namespace iwagraph
