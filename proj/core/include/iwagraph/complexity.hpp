#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iwagraph/character.hpp"
#include "iwagraph/graph.hpp"
#include "iwagraph/voltage.hpp"

namespace iwagraph {

// Weighted complexity as the (k,k) cofactor of D^W - W; any k gives the same
// value when W is symmetric (rejected otherwise).  Disconnected graphs give 0.
Rational kappa_matrix_tree(const WeightedGraph& g, std::size_t k = 0);

// W_psi = sum_sigma psi(sigma) W(sigma): entry (i,j) sums psi(alpha(e)) w(e)
// over darts i -> j.
Matrix<CyclotomicNumber> character_matrix(const WeightedGraph& g,
                                          const FiniteGroup& group,
                                          const FiniteVoltage& alpha,
                                          const Character& psi);

// h(psi) = det(D^W - W_psi), the t = 1 specialization of the three-term form.
CyclotomicNumber h_value(const WeightedGraph& g, const FiniteGroup& group,
                         const FiniteVoltage& alpha, const Character& psi);

struct HValueEntry {
  Character psi;
  CyclotomicNumber value;
};

struct ProductFormulaResult {
  Rational kappa_base;           // kappa(X)
  Rational kappa_cover_product;  // kappa(X)/|G| * prod h(psi)
  Rational kappa_cover_direct;   // matrix-tree on the derived cover
  std::vector<HValueEntry> h_values;  // nontrivial characters in order
  std::vector<std::size_t> vanishing; // indices into h_values with h = 0
};

// Both routes to kappa of the cover; throws consistency_error when they
// disagree or when the character product fails to be rational.
ProductFormulaResult product_formula_kappa(const WeightedGraph& g,
                                           const FiniteGroup& group,
                                           const FiniteVoltage& alpha);

// Coefficientwise identity between the dart-matrix determinant and the
// (1-t^2)^{-chi} vertex-matrix determinant, for one character.
bool three_term_check(const WeightedGraph& g, const FiniteGroup& group,
                      const FiniteVoltage& alpha, const Character& psi);

}  // namespace iwagraph
