#pragma once

#include <cstdint>
#include <vector>

#include "iwagraph/graph.hpp"
#include "iwagraph/group.hpp"
#include "iwagraph/laurent.hpp"

namespace iwagraph {

// Voltage assignment into Z^d, stored once per involution pair on the default
// orientation; the inverse dart carries the negated vector.
class ZdVoltage {
 public:
  ZdVoltage(int dims, std::vector<Exponents> per_pair)
      : dims_(dims), per_pair_(std::move(per_pair)) {}

  int dims() const { return dims_; }
  std::size_t pairs() const { return per_pair_.size(); }
  // Value on an arbitrary dart.
  Exponents on_dart(int dart) const;
  const Exponents& on_pair(std::size_t pair) const { return per_pair_[pair]; }

  // Componentwise reduction into (Z/p^n Z)^d as indices of
  // FiniteGroup::abelian({p^n, ..., p^n}).
  std::vector<std::uint32_t> reduced(const FiniteGroup& gamma_n, std::uint32_t p,
                                     std::uint32_t n) const;

 private:
  int dims_;
  std::vector<Exponents> per_pair_;
};

// Voltage assignment into a finite group, one element per involution pair.
struct FiniteVoltage {
  std::vector<std::uint32_t> per_pair;
  std::uint32_t on_dart(const FiniteGroup& g, int dart) const {
    std::uint32_t v = per_pair[static_cast<std::size_t>(dart / 2)];
    return (dart & 1) ? g.inverse(v) : v;
  }
};

// Derived graph of a finite voltage assignment, with the projection and the
// deck data needed to verify the covering properties.
struct Cover {
  WeightedGraph graph;
  FiniteGroup deck;
  std::vector<int> vertex_base;            // cover vertex -> base vertex
  std::vector<std::uint32_t> vertex_deck;  // cover vertex -> sigma
  std::vector<int> dart_base;              // cover dart -> base dart

  int vertex_of(int base_vertex, std::uint32_t sigma) const {
    return base_vertex * static_cast<int>(deck.size()) + static_cast<int>(sigma);
  }
  // Left action of the deck group on vertices: tau.(v, sigma) = (v, tau sigma).
  int deck_act_vertex(std::uint32_t tau, int cover_vertex) const {
    return vertex_of(vertex_base[static_cast<std::size_t>(cover_vertex)],
                     deck.mul(tau, vertex_deck[static_cast<std::size_t>(cover_vertex)]));
  }
  int deck_act_dart(std::uint32_t tau, int cover_dart) const;
};

// X(G, alpha): vertices V x G, darts E x G, t((e, sigma)) = (t(e), sigma a(e)),
// weights pulled back.
Cover derived_cover(const WeightedGraph& x, const FiniteGroup& g,
                    const FiniteVoltage& alpha);

// Net voltages of the fundamental cycles of a spanning tree; the cover is
// connected iff they generate the whole group.
std::vector<std::uint32_t> net_voltages(const WeightedGraph& x, const FiniteGroup& g,
                                        const FiniteVoltage& alpha);
bool cover_is_connected(const WeightedGraph& x, const FiniteGroup& g,
                        const FiniteVoltage& alpha);

// For a Z^d voltage: the whole tower is connected iff the net-voltage vectors
// span F_p^d; this decides connectivity for every layer at once.
bool tower_is_connected(const WeightedGraph& x, const ZdVoltage& alpha,
                        std::uint32_t p);
std::vector<Exponents> net_voltage_vectors(const WeightedGraph& x,
                                           const ZdVoltage& alpha);

// Layer n of the tower: the (Z/p^n)^d cover under the reduced voltage.
// n = 0 yields a copy of X itself (trivial deck group).
Cover tower_layer(const WeightedGraph& x, const ZdVoltage& alpha, std::uint32_t p,
                  std::uint32_t n);

// Pullback of alpha along the projection of a cover: each cover dart inherits
// the voltage of its base dart.
ZdVoltage pullback(const Cover& cover, const ZdVoltage& alpha);

}  // namespace iwagraph
