#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwagraph/char_element.hpp"
#include "iwagraph/complexity.hpp"

namespace iwagraph {

// Minimum coefficient valuation of Q (rational coefficients, so e = 1).
// Rejects the zero element.
Rational mu_invariant(const CharElement& q);

struct LambdaResult {
  long lambda_Q = 0;      // order sum for the mod-p unit part
  long lambda_tower = 0;  // the tower invariant: lambda_Q - 1 when d = 1
  // Divisor exponent vectors with multiplicities (d = 1: the single entry (1)).
  std::vector<std::pair<Exponents, int>> certificate;
  int box_used = 0;
  bool cross_check_ok = true;  // valuation-sum fit agreed (d >= 2)
  long lambda_fit = -1;        // fitted lambda when the cross-check ran
};

// d = 1: exact order at (T).  d >= 2: bounded trial division over primitive
// exponent vectors (up to sign, sup-norm <= box) cross-checked against the
// valuation-sum fit; a disagreement doubles the box once, then reports
// cross_check_ok = false.
LambdaResult lambda_invariant(const CharElement& q, int box = 4, int jobs = 1);

struct ValuationSum {
  bool vanished = false;
  std::vector<std::uint32_t> vanishing_point;  // exponent tuple of the failing zeta
  Rational sum;                                // over all nontrivial tuples
};

// Sum of v_p(Q(zeta - 1)) over the p^{dn} - 1 nontrivial tuples of p^n-th
// roots of unity, one evaluation per Galois orbit.
ValuationSum valuation_sum(const CharElement& q, std::uint32_t n, int jobs = 1);

struct GrowthFit {
  bool solvable = false;
  bool consistent = false;  // exact match on the held-out points
  Rational mu, lambda, nu;
  std::vector<Rational> mu_i, lambda_i;  // secondary coefficients, i = 1..d-1
};

// The fitted closed form evaluated at layer n.
Rational growth_value(const GrowthFit& fit, std::uint32_t p, int d, long n);

// Fits v(n) = (mu p^n + lambda n) p^{(d-1)n} + sum_i (mu_i p^n + lambda_i n)
// p^{(d-i-1)n} + nu on the first 2d+1 points; the rest verify.
GrowthFit fit_growth(const std::vector<std::pair<long, Rational>>& points,
                     std::uint32_t p, int d);
// Same with mu and lambda pinned; only secondary coefficients are solved for.
GrowthFit fit_growth_pinned(const std::vector<std::pair<long, Rational>>& points,
                            std::uint32_t p, int d, const Rational& mu,
                            const Rational& lambda);

struct LayerRow {
  std::uint32_t n = 0;
  std::size_t vertices = 0;
  Rational kappa_mt;       // matrix-tree on the explicit layer
  Rational kappa_product;  // recurrence route through Q evaluations
  bool kappa_zero = false;
  Rational v_p;  // defined when kappa != 0
};

struct ZeroCaseReport {
  std::uint32_t first_zero_layer = 0;
  // Exponent tuples of characters with vanishing h at that layer.
  std::vector<std::string> vanishing_characters;
  bool nonzero_q = false;  // Q != 0 yet an evaluation vanished
};

struct IwasawaReport {
  std::uint32_t p = 2;
  int d = 1;
  std::uint32_t nmax = 0;
  CharElement q;
  bool q_zero = false;
  std::optional<ZeroCaseReport> zero_case;
  Rational mu;
  LambdaResult lambda;
  GrowthFit fit;                   // secondary coefficients, labeled empirical
  long stable_from = -1;           // closed form matches from this layer on
  long stable_from_provable = -1;  // d = 1: first n with phi(p^n) >= lambda_Q
  std::vector<LayerRow> table;
  // Extra layers beyond nmax, computed through the recurrence identity
  // v_p(kappa_n) = -dn + v_p(kappa_0) + sum of v_p(Q(zeta - 1)); they feed the
  // fit's held-out verification without explicit layer determinants.
  std::vector<std::pair<long, Rational>> extended;
  bool closed_form_ok = false;
};

// Computes kappa_n along the tower by both routes, extracts mu/lambda from
// the characteristic element, fits secondary coefficients, and checks the
// closed form against the table.  Route disagreement throws consistency_error.
IwasawaReport tower_report(const WeightedGraph& g, const ZdVoltage& alpha,
                           std::uint32_t p, std::uint32_t nmax, int box = 4,
                           int jobs = 1);

struct KidaReport {
  std::uint32_t degree = 1;  // [Y:X]
  int d = 1;
  Rational mu_x, mu_y;
  long lambda_x = 0, lambda_y = 0;  // tower invariants
  bool hypotheses_ok = false;
  std::string hypothesis_failure;
  bool relation_holds = false;
};

// Builds Y = X(G, beta), pulls the Z^d voltage back, and checks the degree
// relation between the lambda invariants (mu must vanish on both sides).
KidaReport kida_verify(const WeightedGraph& g, const ZdVoltage& alpha,
                       std::uint32_t p, const FiniteGroup& group,
                       const FiniteVoltage& beta, int box = 4, int jobs = 1);

}  // namespace iwagraph
