#include "iwagraph/arborescence.hpp"

#include "iwagraph/errors.hpp"

namespace iwagraph {

namespace {

struct Enumerator {
  const WeightedGraph& g;
  int root;
  std::vector<int> order;                 // non-root vertices
  std::vector<std::vector<int>> in_darts; // candidate incoming darts per vertex
  std::vector<int> parent_dart;           // -1 until chosen
  std::vector<int> chosen;
  ArborescenceList out;

  // A cycle among already-chosen parents would survive any completion.
  bool creates_cycle(int v) const {
    int cur = g.dart(parent_dart[static_cast<std::size_t>(v)]).origin;
    while (cur != root) {
      if (cur == v) return true;
      int pd = parent_dart[static_cast<std::size_t>(cur)];
      if (pd < 0) return false;
      cur = g.dart(pd).origin;
    }
    return false;
  }

  void recurse(std::size_t idx, Rational product) {
    if (idx == order.size()) {
      out.trees.emplace_back(chosen, product);
      out.weight_sum += product;
      return;
    }
    int v = order[idx];
    for (int d : in_darts[static_cast<std::size_t>(v)]) {
      parent_dart[static_cast<std::size_t>(v)] = d;
      if (!creates_cycle(v)) {
        chosen.push_back(d);
        recurse(idx + 1, product * g.dart(d).weight);
        chosen.pop_back();
      }
      parent_dart[static_cast<std::size_t>(v)] = -1;
    }
  }
};

}  // namespace

ArborescenceList enumerate_arborescences(const WeightedGraph& g, int root) {
  if (g.vertex_count() > 12)
    throw input_error("enumerate_arborescences: more than 12 vertices");
  if (root < 0 || root >= g.vertex_count())
    throw input_error("enumerate_arborescences: bad root");
  Enumerator e{g, root, {}, {}, {}, {}, {}};
  e.in_darts.assign(static_cast<std::size_t>(g.vertex_count()), {});
  for (int d = 0; d < g.dart_count(); ++d) {
    const Dart& dart = g.dart(d);
    if (dart.origin != dart.terminus)  // loops can never join an arborescence
      e.in_darts[static_cast<std::size_t>(dart.terminus)].push_back(d);
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (v != root) e.order.push_back(v);
  e.parent_dart.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  e.out.weight_sum = Rational(0);
  e.recurse(0, Rational(1));
  return e.out;
}

}  // namespace iwagraph
