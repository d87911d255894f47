#include "iwagraph/complexity.hpp"

#include "iwagraph/errors.hpp"

namespace iwagraph {

Rational kappa_matrix_tree(const WeightedGraph& g, std::size_t k) {
  if (!g.weighted_matrix_symmetric())
    throw input_error("kappa_matrix_tree: weighted matrix is not symmetric");
  std::size_t m = static_cast<std::size_t>(g.vertex_count());
  if (k >= m) throw input_error("kappa_matrix_tree: cofactor index out of range");
  if (m == 1) return Rational(1);  // empty cofactor determinant
  Matrix<Rational> w = g.weighted_matrix();
  Matrix<Rational> d = g.degree_matrix();
  Matrix<Rational> lap(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) lap.at(i, j) = d.at(i, j) - w.at(i, j);
  return bareiss_determinant(lap.minor_matrix(k, k));
}

Matrix<CyclotomicNumber> character_matrix(const WeightedGraph& g,
                                          const FiniteGroup& group,
                                          const FiniteVoltage& alpha,
                                          const Character& psi) {
  std::size_t m = static_cast<std::size_t>(g.vertex_count());
  Matrix<CyclotomicNumber> w(m, m, CyclotomicNumber::from_rational(psi.prime(), Rational(0)));
  for (int dart = 0; dart < g.dart_count(); ++dart) {
    const Dart& e = g.dart(dart);
    CyclotomicNumber contrib =
        psi.value(alpha.on_dart(group, dart)).scaled(e.weight);
    w.at(static_cast<std::size_t>(e.origin), static_cast<std::size_t>(e.terminus)) +=
        contrib;
  }
  return w;
}

CyclotomicNumber h_value(const WeightedGraph& g, const FiniteGroup& group,
                         const FiniteVoltage& alpha, const Character& psi) {
  std::size_t m = static_cast<std::size_t>(g.vertex_count());
  Matrix<CyclotomicNumber> w = character_matrix(g, group, alpha, psi);
  Matrix<Rational> d = g.degree_matrix();
  Matrix<CyclotomicNumber> h(m, m, CyclotomicNumber::from_rational(psi.prime(), Rational(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      h.at(i, j) = -w.at(i, j);
      if (i == j)
        h.at(i, j) += CyclotomicNumber::from_rational(psi.prime(), d.at(i, i));
    }
  return ring_determinant(h);
}

ProductFormulaResult product_formula_kappa(const WeightedGraph& g,
                                           const FiniteGroup& group,
                                           const FiniteVoltage& alpha) {
  // Character values live in Q(zeta_q) for the group exponent q = p^N.
  std::uint32_t p = 2;
  for (std::uint32_t q : group.abelian_orders()) {
    if (q <= 1) continue;
    for (p = 2; q % p != 0; ++p) {
    }
    break;
  }
  ProductFormulaResult result;
  result.kappa_base = kappa_matrix_tree(g);
  CyclotomicNumber prod = CyclotomicNumber::from_rational(p, Rational(1));
  for (const Character& psi : all_characters(group, p)) {
    if (psi.is_trivial()) continue;
    CyclotomicNumber h = h_value(g, group, alpha, psi);
    if (h.is_zero()) result.vanishing.push_back(result.h_values.size());
    result.h_values.push_back({psi, h});
    prod *= h;
  }
  if (!prod.is_rational())
    throw consistency_error(
        "product formula: character product is not rational: " + prod.str());
  Rational kappa = result.kappa_base * prod.rational_value();
  kappa /= Rational(static_cast<unsigned long>(group.size()));
  result.kappa_cover_product = kappa;
  result.kappa_cover_direct = kappa_matrix_tree(derived_cover(g, group, alpha).graph);
  if (result.kappa_cover_product != result.kappa_cover_direct)
    throw consistency_error("product formula: cover complexity mismatch: product " +
                            rational_str(result.kappa_cover_product) +
                            " vs matrix-tree " +
                            rational_str(result.kappa_cover_direct));
  return result;
}

bool three_term_check(const WeightedGraph& g, const FiniteGroup& group,
                      const FiniteVoltage& alpha, const Character& psi) {
  std::uint32_t p = psi.prime();
  int twol = g.dart_count();
  CyclotomicNumber zero = CyclotomicNumber::from_rational(p, Rational(0));

  // Dart-side matrix: entry (i,j) = psi(alpha(e_i)) (w(e_j) [t(e_i)=o(e_j)] - [e_i-bar = e_j]).
  Matrix<CyclotomicNumber> edge(static_cast<std::size_t>(twol),
                                static_cast<std::size_t>(twol), zero);
  for (int i = 0; i < twol; ++i) {
    CyclotomicNumber pa = psi.value(alpha.on_dart(group, i));
    for (int j = 0; j < twol; ++j) {
      Rational coeff(0);
      if (g.dart(i).terminus == g.dart(j).origin) coeff += g.dart(j).weight;
      if (WeightedGraph::inverse(i) == j) coeff -= 1;
      if (coeff != 0) edge.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          pa.scaled(coeff);
    }
  }
  // det(I - tE) from the characteristic polynomial of E.
  Poly<CyclotomicNumber> cp = berkowitz_charpoly(edge);
  std::vector<CyclotomicNumber> lhs(static_cast<std::size_t>(twol) + 1, zero);
  for (std::size_t k = 0; k < lhs.size(); ++k)
    lhs[static_cast<std::size_t>(twol) - k] = cp.coeff(k);
  Poly<CyclotomicNumber> edge_side(std::move(lhs));

  // Vertex-side matrix: I - t W_psi + t^2 (D - I), entries quadratic in t.
  std::size_t m = static_cast<std::size_t>(g.vertex_count());
  Matrix<CyclotomicNumber> w = character_matrix(g, group, alpha, psi);
  Matrix<Rational> d = g.degree_matrix();
  CyclotomicNumber one = CyclotomicNumber::from_rational(p, Rational(1));
  Matrix<Poly<CyclotomicNumber>> vm(m, m, Poly<CyclotomicNumber>());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<CyclotomicNumber> c(3, zero);
      if (i == j) {
        c[0] = one;
        c[2] = CyclotomicNumber::from_rational(p, d.at(i, i) - 1);
      }
      c[1] = -w.at(i, j);
      vm.at(i, j) = Poly<CyclotomicNumber>(std::move(c));
    }
  Poly<CyclotomicNumber> vertex_side = ring_determinant(vm);

  // edge_side = (1 - t^2)^{-chi} vertex_side, as a rational-function identity.
  Poly<CyclotomicNumber> one_minus_t2({one, zero, -one});
  long chi = g.euler_characteristic();
  Poly<CyclotomicNumber> left = edge_side;
  Poly<CyclotomicNumber> right = vertex_side;
  if (chi > 0)
    left = left * one_minus_t2.pow(static_cast<unsigned long>(chi));
  else if (chi < 0)
    right = right * one_minus_t2.pow(static_cast<unsigned long>(-chi));
  return left == right;
}

}  // namespace iwagraph
