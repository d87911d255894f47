#include "iwagraph/char_element.hpp"

#include <algorithm>
#include <map>

#include "iwagraph/complexity.hpp"
#include "iwagraph/errors.hpp"
#include "iwagraph/matrix.hpp"

namespace iwagraph {

CharElement char_element_direct(const WeightedGraph& g, const ZdVoltage& alpha,
                                std::uint32_t p) {
  if (!g.weighted_matrix_symmetric())
    throw input_error("char_element_direct: weighted matrix is not symmetric");
  int d = alpha.dims();
  std::size_t m = static_cast<std::size_t>(g.vertex_count());
  Matrix<LaurentPolynomial> mat(m, m, LaurentPolynomial::zero(d));
  Matrix<Rational> deg = g.degree_matrix();
  for (std::size_t i = 0; i < m; ++i)
    mat.at(i, i) = LaurentPolynomial::constant(d, deg.at(i, i));
  for (int dart = 0; dart < g.dart_count(); ++dart) {
    const Dart& e = g.dart(dart);
    mat.at(static_cast<std::size_t>(e.origin), static_cast<std::size_t>(e.terminus)) -=
        LaurentPolynomial::monomial(d, alpha.on_dart(dart), e.weight);
  }
  return {ring_determinant(mat), p, CharElement::Route::direct};
}

CharElement char_element_sec5(const WeightedGraph& g,
                              const std::vector<int>& orientation,
                              const ZdVoltage& alpha, std::uint32_t p) {
  if (orientation.size() != static_cast<std::size_t>(g.pair_count()))
    throw input_error("char_element_sec5: not an orientation");
  std::vector<char> pair_seen(static_cast<std::size_t>(g.pair_count()), 0);
  for (int s : orientation) {
    if (s < 0 || s >= g.dart_count() || pair_seen[static_cast<std::size_t>(s / 2)])
      throw input_error("char_element_sec5: not an orientation");
    pair_seen[static_cast<std::size_t>(s / 2)] = 1;
  }
  int d = alpha.dims();
  std::size_t m = static_cast<std::size_t>(g.vertex_count());

  // Distinct voltage values b_1, ..., b_N over the orientation darts.
  std::map<Exponents, std::size_t> value_index;
  std::vector<Exponents> values;
  for (int s : orientation) {
    Exponents v = alpha.on_dart(s);
    if (value_index.emplace(v, values.size()).second) values.push_back(v);
  }
  std::size_t nv = values.size();

  // M = D - B - C - L where L_ij = sum_k gamma_ij^(k) X_k + gamma_ji^(k) Y_k,
  // over the polynomial ring in X_1..X_N, Y_1..Y_N.
  int sym_dims = static_cast<int>(2 * nv);
  Matrix<LaurentPolynomial> mat(m, m, LaurentPolynomial::zero(sym_dims));
  Matrix<Rational> deg = g.degree_matrix();
  for (std::size_t i = 0; i < m; ++i)
    mat.at(i, i) = LaurentPolynomial::constant(sym_dims, deg.at(i, i));
  for (int s : orientation) {
    const Dart& e = g.dart(s);
    std::size_t i = static_cast<std::size_t>(e.origin);
    std::size_t j = static_cast<std::size_t>(e.terminus);
    std::size_t k = value_index.at(alpha.on_dart(s));
    // B contribution at (i,j) and its X-term; C = B^T at (j,i) with the Y-term.
    Exponents xk(static_cast<std::size_t>(sym_dims), 0);
    xk[k] = 1;
    Exponents yk(static_cast<std::size_t>(sym_dims), 0);
    yk[nv + k] = 1;
    mat.at(i, j) -= LaurentPolynomial::constant(sym_dims, e.weight);
    mat.at(i, j) -= LaurentPolynomial::monomial(sym_dims, xk, e.weight);
    mat.at(j, i) -= LaurentPolynomial::constant(sym_dims, e.weight);
    mat.at(j, i) -= LaurentPolynomial::monomial(sym_dims, yk, e.weight);
  }
  LaurentPolynomial pw = ring_determinant(mat);

  // Substitute X_k = u^{b_k} - 1, Y_k = u^{-b_k} - 1.
  std::vector<LaurentPolynomial> args;
  args.reserve(2 * nv);
  for (std::size_t k = 0; k < nv; ++k)
    args.push_back(LaurentPolynomial::u_pow_minus_one(d, values[k]));
  for (std::size_t k = 0; k < nv; ++k) {
    Exponents neg = values[k];
    for (auto& c : neg) c = -c;
    args.push_back(LaurentPolynomial::u_pow_minus_one(d, neg));
  }
  LaurentPolynomial q = substitute_laurent(pw, args);
  if (q.is_zero()) q = LaurentPolynomial::zero(d);

  CharElement direct = char_element_direct(g, alpha, p);
  if (!(q == direct.poly))
    throw consistency_error("char element: orientation route " + q.str() +
                            " differs from direct route " + direct.poly.str());
  return {q, p, CharElement::Route::orientation};
}

CyclotomicNumber eval_char_element(const CharElement& q, const Character& psi) {
  std::vector<CyclotomicNumber> zetas;
  const auto& images = psi.images();
  zetas.reserve(images.size());
  CyclotomicNumber zeta = CyclotomicNumber::zeta(psi.prime(), psi.level());
  for (std::uint32_t k : images) zetas.push_back(zeta.pow(static_cast<long>(k)));
  return laurent_eval(q.poly, zetas);
}

CyclotomicNumber eval_char_element_checked(const CharElement& q,
                                           const WeightedGraph& g,
                                           const ZdVoltage& alpha,
                                           std::uint32_t n, const Character& psi) {
  CyclotomicNumber left = eval_char_element(q, psi);
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < n; ++i) order *= q.prime;
  FiniteGroup gamma = FiniteGroup::abelian(std::vector<std::uint32_t>(
      static_cast<std::size_t>(alpha.dims()), static_cast<std::uint32_t>(order)));
  FiniteVoltage av{alpha.reduced(gamma, q.prime, n)};
  CyclotomicNumber right = h_value(g, gamma, av, psi);
  if (!(left == right))
    throw consistency_error("char element evaluation " + left.str() +
                            " differs from h(psi) = " + right.str());
  return left;
}

}  // namespace iwagraph
