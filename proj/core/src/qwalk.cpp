#include "iwagraph/qwalk.hpp"

#include "iwagraph/errors.hpp"
#include "iwagraph/parallel.hpp"

namespace iwagraph {

WeightedGraph qwalk_weights(const WeightedGraph& g) {
  WeightedGraph out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) < 1)
      throw input_error("qwalk_weights: vertex of degree 0");
    out.add_vertex(g.vertex_name(v));
  }
  for (int k = 0; k < g.pair_count(); ++k) {
    const Dart& e = g.dart(2 * k);
    Rational w(2);
    w /= Rational(g.out_degree(e.origin));
    Rational w_rev(2);
    w_rev /= Rational(g.out_degree(e.terminus));
    out.add_edge(e.origin, e.terminus, w, w_rev, g.edge_name(k));
  }
  return out;
}

Matrix<Rational> transition_matrix(const WeightedGraph& g) {
  std::size_t twol = static_cast<std::size_t>(g.dart_count());
  Matrix<Rational> u(twol, twol);
  for (int i = 0; i < g.dart_count(); ++i) {
    // Both cases use the degree at o(e_i) = t(e_j): the row over the d_v
    // darts into v sums to (d_v - 1) 2/d_v + 2/d_v - 1 = 1, and the matrix is
    // the transpose of the B - C edge matrix with the 2/deg weights, which is
    // what ties det(I - tU) to the zeta function.
    Rational w(2);
    w /= Rational(g.out_degree(g.dart(i).origin));
    for (int j = 0; j < g.dart_count(); ++j) {
      if (WeightedGraph::inverse(i) == j) {
        u.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = w - 1;
      } else if (g.dart(i).origin == g.dart(j).terminus) {
        u.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = w;
      }
    }
  }
  return u;
}

bool spectral_identity_check(const WeightedGraph& g) {
  WeightedGraph wg = qwalk_weights(g);
  Matrix<Rational> u = transition_matrix(g);
  Poly<Rational> lhs = berkowitz_charpoly(u);  // det(xI - U)

  std::size_t m = static_cast<std::size_t>(wg.vertex_count());
  Matrix<Rational> w = wg.weighted_matrix();
  Matrix<Rational> deg = wg.degree_matrix();
  Matrix<Poly<Rational>> vm(m, m, Poly<Rational>());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Rational> c(3, Rational(0));
      c[1] = -w.at(i, j);
      if (i == j) {
        c[0] = deg.at(i, i) - 1;
        c[2] = Rational(1);
      }
      vm.at(i, j) = Poly<Rational>(std::move(c));
    }
  Poly<Rational> rhs = ring_determinant(vm);

  long l = wg.pair_count();
  long exp = l - static_cast<long>(m);
  Poly<Rational> u2m1({Rational(-1), Rational(0), Rational(1)});  // u^2 - 1
  Poly<Rational> left = lhs;
  Poly<Rational> right = rhs;
  if (exp >= 0)
    right = right * u2m1.pow(static_cast<unsigned long>(exp));
  else
    left = left * u2m1.pow(static_cast<unsigned long>(-exp));
  return left == right;
}

CharpolyValue charpoly_at(const Matrix<Rational>& u, const Rational& a) {
  std::size_t n = u.rows();
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = -u.at(i, j);
      if (i == j) m.at(i, j) += a;
    }
  Rational det = bareiss_determinant(m);
  CharpolyValue out;
  if (det == 0) {
    out.eigenvalue_hit = true;
  } else {
    out.det = det;
  }
  return out;
}

namespace {

std::int64_t ipow(std::uint32_t p, std::uint32_t n) {
  std::int64_t r = 1;
  for (std::uint32_t i = 0; i < n; ++i) r *= p;
  return r;
}

}  // namespace

QwalkGrowthReport qwalk_growth(const WeightedGraph& g, const ZdVoltage& alpha,
                               std::uint32_t p, const Rational& a,
                               std::uint32_t nmax, int jobs,
                               std::size_t direct_limit) {
  WeightedGraph wg = qwalk_weights(g);
  if (!wg.weighted_matrix_symmetric())
    throw input_error("qwalk_growth: 2/deg weights are asymmetric (graph not regular)");
  if (!tower_is_connected(wg, alpha, p))
    throw input_error("qwalk_growth: tower layers are disconnected mod p");

  QwalkGrowthReport report;
  report.a = a;
  report.p = p;
  report.d = alpha.dims();
  report.nmax = nmax;

  // Q_a = det(a^2 I - a W_{tau,alpha} + (D^W - I)).
  int d = alpha.dims();
  std::size_t m = static_cast<std::size_t>(wg.vertex_count());
  Matrix<LaurentPolynomial> qm(m, m, LaurentPolynomial::zero(d));
  Matrix<Rational> deg = wg.degree_matrix();
  for (std::size_t i = 0; i < m; ++i)
    qm.at(i, i) = LaurentPolynomial::constant(d, a * a + deg.at(i, i) - 1);
  for (int dart = 0; dart < wg.dart_count(); ++dart) {
    const Dart& e = wg.dart(dart);
    qm.at(static_cast<std::size_t>(e.origin), static_cast<std::size_t>(e.terminus)) -=
        LaurentPolynomial::monomial(d, alpha.on_dart(dart), a * e.weight);
  }
  report.q_a = {ring_determinant(qm), p, CharElement::Route::direct};
  if (report.q_a.poly.is_zero())
    throw input_error("qwalk_growth: Q_a vanishes identically (a is an eigenvalue)");

  report.mu_q = mu_invariant(report.q_a);
  report.lambda_q = lambda_invariant(report.q_a, 4, jobs).lambda_Q;
  long chi = wg.euler_characteristic();
  Valuation va = val_p_rational(a * a - 1, p);
  if (chi != 0 && va.is_infinite())
    throw input_error("qwalk_growth: a = +-1 with nonzero Euler characteristic");
  report.chi_term = chi == 0 ? Rational(0) : Rational(chi) * va.value();

  report.table.assign(nmax + 1, QwalkLayerRow{});
  std::optional<std::uint32_t> hit;
  parallel_for_index(nmax + 1, jobs, [&](std::size_t ni) {
    std::uint32_t n = static_cast<std::uint32_t>(ni);
    QwalkLayerRow row;
    row.n = n;
    Cover layer = tower_layer(wg, alpha, p, n);
    row.darts = static_cast<std::size_t>(layer.graph.dart_count());

    // Factored route: -p^{dn} chi v_p(a^2-1) + sum over characters of
    // v_p(Q_a(zeta - 1)), including the trivial one.
    std::int64_t modulus = ipow(p, n);
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(modulus);
    Rational sum(0);
    bool vanished = false;
    std::vector<std::uint32_t> k(static_cast<std::size_t>(d), 0);
    for (std::size_t idx = 0; idx < total && !vanished; ++idx) {
      std::size_t rest = idx;
      for (int i = 0; i < d; ++i) {
        k[static_cast<std::size_t>(i)] =
            static_cast<std::uint32_t>(rest % static_cast<std::size_t>(modulus));
        rest /= static_cast<std::size_t>(modulus);
      }
      std::vector<CyclotomicNumber> zetas;
      CyclotomicNumber zeta = CyclotomicNumber::zeta(p, n);
      for (int i = 0; i < d; ++i)
        zetas.push_back(zeta.pow(static_cast<long>(k[static_cast<std::size_t>(i)])));
      CyclotomicNumber value = laurent_eval(report.q_a.poly, zetas);
      Valuation v = value.valuation();
      if (v.is_infinite())
        vanished = true;
      else
        sum += v.value();
    }
    if (vanished) {
      if (!hit || n < *hit) hit = n;
      report.table[ni] = row;
      return;
    }
    Rational pdn(1);
    for (int i = 0; i < d; ++i) pdn *= Rational(static_cast<unsigned long>(modulus));
    row.v_p_factored = sum;
    if (chi != 0) row.v_p_factored -= pdn * Rational(chi) * va.value();

    if (row.darts <= direct_limit) {
      Matrix<Rational> u = transition_matrix(layer.graph);
      CharpolyValue cv = charpoly_at(u, a);
      if (cv.eigenvalue_hit) {
        if (!hit || n < *hit) hit = n;
        report.table[ni] = row;
        return;
      }
      row.det_direct = cv.det;
      row.direct_computed = true;
      row.v_p_direct = val_p_rational(cv.det, p).value();
      if (row.v_p_direct != row.v_p_factored)
        throw consistency_error("qwalk layer " + std::to_string(n) +
                                ": direct valuation " + rational_str(row.v_p_direct) +
                                " differs from factored valuation " +
                                rational_str(row.v_p_factored));
    }
    report.table[ni] = row;
  });
  if (hit) {
    report.eigenvalue_layer = hit;
    return report;
  }

  // Fit the growth polynomial on the factored valuations, dropping leading
  // layers until the closed form holds exactly on the rest.
  std::vector<std::pair<long, Rational>> points;
  for (const auto& row : report.table)
    points.push_back({static_cast<long>(row.n), row.v_p_factored});
  std::size_t unknowns = static_cast<std::size_t>(2 * report.d + 1);
  for (std::size_t start = 0; start + unknowns < points.size(); ++start) {
    std::vector<std::pair<long, Rational>> window(points.begin() + start,
                                                  points.end());
    GrowthFit fit = fit_growth(window, p, report.d);
    if (fit.solvable && fit.consistent) {
      report.fit = fit;
      report.stable_from = points[start].first;
      break;
    }
  }
  if (report.stable_from >= 0) {
    report.mu_decomposition_ok = report.fit.mu == report.mu_q - report.chi_term;
    for (auto& row : report.table) {
      if (static_cast<long>(row.n) < report.stable_from) continue;
      row.v_p_predicted = growth_value(report.fit, p, report.d,
                                       static_cast<long>(row.n));
      row.predicted_valid = true;
    }
  }
  if (report.d == 1) {
    std::uint32_t n = 0;
    while (static_cast<long>(prime_power_totient(p, n)) < report.lambda_q && n < 64)
      ++n;
    report.remark_bound = n;
  }
  return report;
}

}  // namespace iwagraph
