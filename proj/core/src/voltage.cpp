#include "iwagraph/voltage.hpp"

#include <stdexcept>

#include "iwagraph/errors.hpp"

namespace iwagraph {

Exponents ZdVoltage::on_dart(int dart) const {
  Exponents v = per_pair_[static_cast<std::size_t>(dart / 2)];
  if (dart & 1)
    for (auto& x : v) x = -x;
  return v;
}

std::vector<std::uint32_t> ZdVoltage::reduced(const FiniteGroup& gamma_n,
                                              std::uint32_t p, std::uint32_t n) const {
  std::int64_t modulus = 1;
  for (std::uint32_t i = 0; i < n; ++i) modulus *= p;
  std::vector<std::uint32_t> out;
  out.reserve(per_pair_.size());
  for (const auto& v : per_pair_) {
    std::vector<std::uint32_t> coords(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      coords[i] = static_cast<std::uint32_t>(((v[i] % modulus) + modulus) % modulus);
    out.push_back(gamma_n.abelian_element(coords));
  }
  return out;
}

int Cover::deck_act_dart(std::uint32_t tau, int cover_dart) const {
  int pair = cover_dart / 2;
  int parity = cover_dart & 1;
  std::uint32_t n = deck.size();
  int base_pair = pair / static_cast<int>(n);
  std::uint32_t sigma = static_cast<std::uint32_t>(pair % static_cast<int>(n));
  return 2 * (base_pair * static_cast<int>(n) +
              static_cast<int>(deck.mul(tau, sigma))) +
         parity;
}

Cover derived_cover(const WeightedGraph& x, const FiniteGroup& g,
                    const FiniteVoltage& alpha) {
  if (alpha.per_pair.size() != static_cast<std::size_t>(x.pair_count()))
    throw input_error("derived_cover: voltage arity mismatch");
  Cover cover{WeightedGraph{}, g, {}, {}, {}};
  std::uint32_t n = g.size();
  for (int v = 0; v < x.vertex_count(); ++v) {
    for (std::uint32_t s = 0; s < n; ++s) {
      cover.graph.add_vertex(x.vertex_name(v) + "|" + g.name(s));
      cover.vertex_base.push_back(v);
      cover.vertex_deck.push_back(s);
    }
  }
  for (int k = 0; k < x.pair_count(); ++k) {
    const Dart& e = x.dart(2 * k);
    const Dart& ebar = x.dart(2 * k + 1);
    std::uint32_t a = alpha.per_pair[static_cast<std::size_t>(k)];
    for (std::uint32_t s = 0; s < n; ++s) {
      int from = cover.vertex_of(e.origin, s);
      int to = cover.vertex_of(e.terminus, g.mul(s, a));
      cover.graph.add_edge(from, to, e.weight, ebar.weight,
                           x.edge_name(k) + "|" + g.name(s));
      cover.dart_base.push_back(2 * k);
      cover.dart_base.push_back(2 * k + 1);
    }
  }
  return cover;
}

namespace {

// Deck value g(v) of each vertex along a spanning tree from vertex 0, plus
// the list of non-tree pairs.
struct TreeData {
  std::vector<std::uint32_t> deck_value;
  std::vector<char> pair_in_tree;
};

TreeData spanning_tree(const WeightedGraph& x, const FiniteGroup& g,
                       const FiniteVoltage& alpha) {
  if (!x.is_connected()) throw input_error("net voltages: graph is not connected");
  TreeData t;
  t.deck_value.assign(static_cast<std::size_t>(x.vertex_count()), 0);
  t.pair_in_tree.assign(static_cast<std::size_t>(x.pair_count()), 0);
  std::vector<char> seen(static_cast<std::size_t>(x.vertex_count()), 0);
  seen[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int d = 0; d < x.dart_count(); ++d) {
      const Dart& dart = x.dart(d);
      if (dart.origin != v || seen[static_cast<std::size_t>(dart.terminus)]) continue;
      seen[static_cast<std::size_t>(dart.terminus)] = 1;
      t.pair_in_tree[static_cast<std::size_t>(d / 2)] = 1;
      t.deck_value[static_cast<std::size_t>(dart.terminus)] =
          g.mul(t.deck_value[static_cast<std::size_t>(v)], alpha.on_dart(g, d));
      stack.push_back(dart.terminus);
    }
  }
  return t;
}

}  // namespace

std::vector<std::uint32_t> net_voltages(const WeightedGraph& x, const FiniteGroup& g,
                                        const FiniteVoltage& alpha) {
  TreeData t = spanning_tree(x, g, alpha);
  std::vector<std::uint32_t> nets;
  for (int k = 0; k < x.pair_count(); ++k) {
    if (t.pair_in_tree[static_cast<std::size_t>(k)]) continue;
    const Dart& e = x.dart(2 * k);
    // g(o(e)) a(e) g(t(e))^-1
    std::uint32_t v = g.mul(t.deck_value[static_cast<std::size_t>(e.origin)],
                            alpha.per_pair[static_cast<std::size_t>(k)]);
    nets.push_back(
        g.mul(v, g.inverse(t.deck_value[static_cast<std::size_t>(e.terminus)])));
  }
  return nets;
}

bool cover_is_connected(const WeightedGraph& x, const FiniteGroup& g,
                        const FiniteVoltage& alpha) {
  return generated_subgroup(g, net_voltages(x, g, alpha)).size() == g.size();
}

std::vector<Exponents> net_voltage_vectors(const WeightedGraph& x,
                                           const ZdVoltage& alpha) {
  if (!x.is_connected()) throw input_error("net voltages: graph is not connected");
  int d = alpha.dims();
  std::vector<Exponents> value(static_cast<std::size_t>(x.vertex_count()),
                               Exponents(static_cast<std::size_t>(d), 0));
  std::vector<char> seen(static_cast<std::size_t>(x.vertex_count()), 0);
  std::vector<char> in_tree(static_cast<std::size_t>(x.pair_count()), 0);
  seen[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int dd = 0; dd < x.dart_count(); ++dd) {
      const Dart& dart = x.dart(dd);
      if (dart.origin != v || seen[static_cast<std::size_t>(dart.terminus)]) continue;
      seen[static_cast<std::size_t>(dart.terminus)] = 1;
      in_tree[static_cast<std::size_t>(dd / 2)] = 1;
      Exponents w = alpha.on_dart(dd);
      for (int i = 0; i < d; ++i)
        w[static_cast<std::size_t>(i)] += value[static_cast<std::size_t>(v)]
                                               [static_cast<std::size_t>(i)];
      value[static_cast<std::size_t>(dart.terminus)] = std::move(w);
      stack.push_back(dart.terminus);
    }
  }
  std::vector<Exponents> nets;
  for (int k = 0; k < x.pair_count(); ++k) {
    if (in_tree[static_cast<std::size_t>(k)]) continue;
    const Dart& e = x.dart(2 * k);
    Exponents net = alpha.on_pair(static_cast<std::size_t>(k));
    for (int i = 0; i < d; ++i)
      net[static_cast<std::size_t>(i)] +=
          value[static_cast<std::size_t>(e.origin)][static_cast<std::size_t>(i)] -
          value[static_cast<std::size_t>(e.terminus)][static_cast<std::size_t>(i)];
    nets.push_back(std::move(net));
  }
  return nets;
}

bool tower_is_connected(const WeightedGraph& x, const ZdVoltage& alpha,
                        std::uint32_t p) {
  // Rank of the net-voltage vectors over F_p: full rank generates (Z/p^n)^d
  // for every n at once (Nakayama for p-groups).
  std::vector<Exponents> nets = net_voltage_vectors(x, alpha);
  int d = alpha.dims();
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& v : nets) {
    std::vector<std::uint32_t> r(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      std::int64_t m = v[static_cast<std::size_t>(i)] % static_cast<std::int64_t>(p);
      r[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>((m + p) % p);
    }
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (int col = 0; col < d; ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(col)] == 0)
      ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
    std::uint64_t inv = 1, base = rows[static_cast<std::size_t>(rank)]
                                     [static_cast<std::size_t>(col)] %
                                 p,
                  e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      std::uint64_t f = rows[r][static_cast<std::size_t>(col)] * inv % p;
      if (f == 0) continue;
      for (int j = 0; j < d; ++j)
        rows[r][static_cast<std::size_t>(j)] =
            static_cast<std::uint32_t>((rows[r][static_cast<std::size_t>(j)] + p * p -
                                        f * rows[static_cast<std::size_t>(rank)]
                                               [static_cast<std::size_t>(j)] %
                                            p * 1u) %
                                       p);
    }
    ++rank;
  }
  return rank == d;
}

Cover tower_layer(const WeightedGraph& x, const ZdVoltage& alpha, std::uint32_t p,
                  std::uint32_t n) {
  if (!is_prime(p)) throw input_error("tower_layer: p must be prime");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    order *= p;
    if (order > (1u << 24)) throw input_error("tower_layer: layer too large");
  }
  FiniteGroup gamma = FiniteGroup::abelian(std::vector<std::uint32_t>(
      static_cast<std::size_t>(alpha.dims()), static_cast<std::uint32_t>(order)));
  FiniteVoltage av{alpha.reduced(gamma, p, n)};
  return derived_cover(x, gamma, av);
}

ZdVoltage pullback(const Cover& cover, const ZdVoltage& alpha) {
  std::vector<Exponents> per_pair;
  per_pair.reserve(static_cast<std::size_t>(cover.graph.pair_count()));
  std::uint32_t n = cover.deck.size();
  for (int pp = 0; pp < cover.graph.pair_count(); ++pp)
    per_pair.push_back(alpha.on_pair(static_cast<std::size_t>(pp / static_cast<int>(n))));
  return ZdVoltage(alpha.dims(), std::move(per_pair));
}

}  // namespace iwagraph
