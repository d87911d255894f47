#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iwagraph/invariants.hpp"

namespace iwagraph {

// Reweights every dart to 2/deg(o(e)).  The diagonal out-weight matrix is
// then 2I on any graph; W is symmetric exactly for the regular ones, which is
// what the tower machinery requires (and checks).
WeightedGraph qwalk_weights(const WeightedGraph& g);

// Grover-walk transition matrix on darts: 2/deg on head-to-tail incidence,
// 2/deg - 1 on the backtrack pair, 0 otherwise.  Row sums are 1.
Matrix<Rational> transition_matrix(const WeightedGraph& g);

// det(u I - U) = (u^2 - 1)^{l - m} det(u^2 I - u W + (D^W - I)) with the
// 2/deg weights, verified as an exact identity after cross-multiplication.
bool spectral_identity_check(const WeightedGraph& g);

struct CharpolyValue {
  bool eigenvalue_hit = false;
  Rational det;  // defined when !eigenvalue_hit
};

// det(aI - U) by exact elimination; a zero value reports an eigenvalue hit.
CharpolyValue charpoly_at(const Matrix<Rational>& u, const Rational& a);

struct QwalkLayerRow {
  std::uint32_t n = 0;
  std::size_t darts = 0;
  Rational det_direct;     // det(aI - U_n) when computed directly
  bool direct_computed = false;
  Rational v_p_direct;
  Rational v_p_factored;   // via Q_a evaluations
  Rational v_p_predicted;  // fitted closed form (once stable)
  bool predicted_valid = false;
};

struct QwalkGrowthReport {
  Rational a;
  std::uint32_t p = 2;
  int d = 1;
  std::uint32_t nmax = 0;
  CharElement q_a;                // det(a^2 I - a W_{tau,alpha} + (D - I))
  Rational mu_q;                  // mu(Q_a)
  long lambda_q = 0;              // lambda(Q_a)
  Rational chi_term;              // chi(X) v_p(a^2 - 1)
  GrowthFit fit;
  long stable_from = -1;
  long remark_bound = -1;         // d = 1: first n with phi(p^n) >= lambda_q
  bool mu_decomposition_ok = false;  // fitted mu == mu_q - chi_term
  std::vector<QwalkLayerRow> table;
  std::optional<std::uint32_t> eigenvalue_layer;  // aborted layer when set
};

// v_p(det(aI - U_n)) per layer, both directly and through the character
// factorization, with the fitted growth polynomial and the mu decomposition.
// Layers with more than `direct_limit` darts skip the direct determinant.
QwalkGrowthReport qwalk_growth(const WeightedGraph& g, const ZdVoltage& alpha,
                               std::uint32_t p, const Rational& a,
                               std::uint32_t nmax, int jobs = 1,
                               std::size_t direct_limit = 512);

}  // namespace iwagraph
