#pragma once

#include <cstdint>
#include <vector>

#include "iwagraph/character.hpp"
#include "iwagraph/laurent.hpp"
#include "iwagraph/voltage.hpp"

namespace iwagraph {

// Characteristic element of a Z^d voltage graph: det(D^W - W_{tau,alpha}) as
// a Laurent polynomial in u_i = 1 + T_i.  Evaluating at u = 1 gives 0.
struct CharElement {
  LaurentPolynomial poly;
  std::uint32_t prime;
  enum class Route { direct, orientation } provenance = Route::direct;
};

// Direct route: the m x m determinant over the Laurent ring, entry (i,j) of
// W_{tau,alpha} being the sum of w(e) u^{alpha(e)} over darts i -> j.
CharElement char_element_direct(const WeightedGraph& g, const ZdVoltage& alpha,
                                std::uint32_t p);

// Orientation route: symbolic determinant in 2N indeterminates (one X/Y pair
// per distinct voltage value on the orientation), then substitution
// X_k = u^{b_k} - 1, Y_k = u^{-b_k} - 1.  Must reproduce the direct route
// exactly; disagreement throws consistency_error.
CharElement char_element_sec5(const WeightedGraph& g,
                              const std::vector<int>& orientation,
                              const ZdVoltage& alpha, std::uint32_t p);

// Q(zeta_psi - 1): exact evaluation at the root-of-unity tuple of a character
// of (Z/p^n)^d.
CyclotomicNumber eval_char_element(const CharElement& q, const Character& psi);

// Same, but re-derives the value as h(psi) on the layer-n voltage data and
// throws consistency_error when the two disagree.
CyclotomicNumber eval_char_element_checked(const CharElement& q,
                                           const WeightedGraph& g,
                                           const ZdVoltage& alpha,
                                           std::uint32_t n, const Character& psi);

}  // namespace iwagraph
