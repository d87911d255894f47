#include "iwagraph/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "iwagraph/errors.hpp"
#include "iwagraph/modp_laurent.hpp"
#include "iwagraph/parallel.hpp"

namespace iwagraph {

namespace {

std::int64_t prime_power(std::uint32_t p, std::uint32_t n) {
  std::int64_t m = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    m *= p;
    if (m > (std::int64_t(1) << 40))
      throw input_error("prime power overflows the supported range");
  }
  return m;
}

// Q(zeta - 1) for the tuple zeta_i = zeta_{p^n}^{k_i}: every term is a power
// of one generator, so the value assembles as a plain polynomial in zeta.
CyclotomicNumber eval_at_tuple(const LaurentPolynomial& poly, std::uint32_t p,
                               std::uint32_t n, const std::vector<std::uint32_t>& k) {
  std::int64_t modulus = prime_power(p, n);
  std::vector<Rational> raw(static_cast<std::size_t>(modulus), Rational(0));
  for (const auto& [a, c] : poly.terms()) {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      e += static_cast<std::int64_t>(a[i]) * k[i];
    e %= modulus;
    if (e < 0) e += modulus;
    raw[static_cast<std::size_t>(e)] += c;
  }
  return CyclotomicNumber::from_polynomial(p, n, std::move(raw));
}

struct Orbit {
  std::vector<std::uint32_t> rep;
  std::size_t size;
};

// Galois orbits of nonzero tuples in (Z/p^n)^d under coordinatewise scaling
// by units; v_p is constant on each orbit.
std::vector<Orbit> galois_orbits(std::uint32_t p, std::uint32_t n, int d) {
  std::int64_t modulus = prime_power(p, n);
  double total_d = 1;
  for (int i = 0; i < d; ++i) total_d *= static_cast<double>(modulus);
  if (total_d > (1 << 24)) throw input_error("galois_orbits: layer too large");
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(modulus);

  auto decode = [&](std::size_t idx) {
    std::vector<std::uint32_t> k(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      k[static_cast<std::size_t>(i)] =
          static_cast<std::uint32_t>(idx % static_cast<std::size_t>(modulus));
      idx /= static_cast<std::size_t>(modulus);
    }
    return k;
  };
  auto encode = [&](const std::vector<std::uint32_t>& k) {
    std::size_t idx = 0;
    for (int i = d; i-- > 0;)
      idx = idx * static_cast<std::size_t>(modulus) + k[static_cast<std::size_t>(i)];
    return idx;
  };

  std::vector<char> visited(total, 0);
  visited[0] = 1;  // trivial tuple excluded
  std::vector<Orbit> orbits;
  for (std::size_t idx = 1; idx < total; ++idx) {
    if (visited[idx]) continue;
    std::vector<std::uint32_t> k = decode(idx);
    std::set<std::size_t> members;
    for (std::int64_t c = 1; c < modulus; ++c) {
      if (c % p == 0) continue;
      std::vector<std::uint32_t> ck(k.size());
      for (std::size_t i = 0; i < k.size(); ++i)
        ck[i] = static_cast<std::uint32_t>(c * k[i] % modulus);
      members.insert(encode(ck));
    }
    for (std::size_t m : members) visited[m] = 1;
    orbits.push_back({std::move(k), members.size()});
  }
  return orbits;
}

}  // namespace

Rational mu_invariant(const CharElement& q) {
  return Rational(laurent_normalize(q.poly, q.prime).mu);
}

ValuationSum valuation_sum(const CharElement& q, std::uint32_t n, int jobs) {
  ValuationSum out;
  out.sum = Rational(0);
  if (n == 0) return out;
  std::vector<Orbit> orbits = galois_orbits(q.prime, n, q.poly.dims());
  std::vector<Valuation> vals(orbits.size());
  parallel_for_index(orbits.size(), jobs, [&](std::size_t i) {
    vals[i] = eval_at_tuple(q.poly, q.prime, n, orbits[i].rep).valuation();
  });
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (vals[i].is_infinite()) {
      out.vanished = true;
      out.vanishing_point = orbits[i].rep;
      return out;
    }
    out.sum += vals[i].value() * Rational(static_cast<unsigned long>(orbits[i].size));
  }
  return out;
}

Rational growth_value(const GrowthFit& fit, std::uint32_t p, int d, long n) {
  Rational v = (fit.mu * rational_pow(p, n) + fit.lambda * Rational(n)) *
               rational_pow(p, (d - 1) * n);
  for (int i = 1; i < d; ++i) {
    v += (fit.mu_i[static_cast<std::size_t>(i - 1)] * rational_pow(p, n) +
          fit.lambda_i[static_cast<std::size_t>(i - 1)] * Rational(n)) *
         rational_pow(p, (d - i - 1) * n);
  }
  v += fit.nu;
  return v;
}

GrowthFit fit_growth(const std::vector<std::pair<long, Rational>>& points,
                     std::uint32_t p, int d) {
  std::size_t unknowns = static_cast<std::size_t>(2 * d + 1);
  if (points.size() < unknowns + 1)
    throw input_error("fit_growth: need at least 2d+2 points");
  auto basis = [&](long n) {
    std::vector<Rational> row;
    for (int i = 0; i < d; ++i) {
      row.push_back(rational_pow(p, (d - i) * n));
      row.push_back(Rational(n) * rational_pow(p, (d - i - 1) * n));
    }
    row.push_back(Rational(1));
    return row;
  };
  Matrix<Rational> a(unknowns, unknowns);
  std::vector<Rational> b(unknowns);
  for (std::size_t r = 0; r < unknowns; ++r) {
    std::vector<Rational> row = basis(points[r].first);
    for (std::size_t c = 0; c < unknowns; ++c) a.at(r, c) = row[c];
    b[r] = points[r].second;
  }
  GrowthFit fit;
  auto x = solve_linear(a, b);
  if (!x) return fit;
  fit.solvable = true;
  fit.mu = (*x)[0];
  fit.lambda = (*x)[1];
  for (int i = 1; i < d; ++i) {
    fit.mu_i.push_back((*x)[static_cast<std::size_t>(2 * i)]);
    fit.lambda_i.push_back((*x)[static_cast<std::size_t>(2 * i + 1)]);
  }
  fit.nu = (*x)[unknowns - 1];
  fit.consistent = true;
  for (std::size_t r = unknowns; r < points.size(); ++r) {
    std::vector<Rational> row = basis(points[r].first);
    Rational predicted(0);
    for (std::size_t c = 0; c < unknowns; ++c) predicted += row[c] * (*x)[c];
    if (predicted != points[r].second) fit.consistent = false;
  }
  return fit;
}

GrowthFit fit_growth_pinned(const std::vector<std::pair<long, Rational>>& points,
                            std::uint32_t p, int d, const Rational& mu,
                            const Rational& lambda) {
  std::size_t unknowns = static_cast<std::size_t>(2 * (d - 1) + 1);
  if (points.size() < unknowns + 1)
    throw input_error("fit_growth_pinned: not enough points");
  auto leading = [&](long n) -> Rational {
    return (mu * rational_pow(p, n) + lambda * Rational(n)) *
           rational_pow(p, (d - 1) * n);
  };
  auto basis = [&](long n) {
    std::vector<Rational> row;
    for (int i = 1; i < d; ++i) {
      row.push_back(rational_pow(p, (d - i) * n));
      row.push_back(Rational(n) * rational_pow(p, (d - i - 1) * n));
    }
    row.push_back(Rational(1));
    return row;
  };
  Matrix<Rational> a(unknowns, unknowns);
  std::vector<Rational> b(unknowns);
  for (std::size_t r = 0; r < unknowns; ++r) {
    std::vector<Rational> row = basis(points[r].first);
    for (std::size_t c = 0; c < unknowns; ++c) a.at(r, c) = row[c];
    b[r] = points[r].second - leading(points[r].first);
  }
  GrowthFit fit;
  fit.mu = mu;
  fit.lambda = lambda;
  auto x = solve_linear(a, b);
  if (!x) return fit;
  fit.solvable = true;
  for (int i = 1; i < d; ++i) {
    fit.mu_i.push_back((*x)[static_cast<std::size_t>(2 * (i - 1))]);
    fit.lambda_i.push_back((*x)[static_cast<std::size_t>(2 * (i - 1) + 1)]);
  }
  fit.nu = (*x)[unknowns - 1];
  fit.consistent = true;
  for (std::size_t r = unknowns; r < points.size(); ++r) {
    std::vector<Rational> row = basis(points[r].first);
    Rational predicted = leading(points[r].first);
    for (std::size_t c = 0; c < unknowns; ++c) predicted += row[c] * (*x)[c];
    if (predicted != points[r].second) fit.consistent = false;
  }
  return fit;
}

LambdaResult lambda_invariant(const CharElement& q, int box, int jobs) {
  if (q.poly.is_zero())
    throw std::domain_error("lambda_invariant: zero characteristic element");
  std::uint32_t p = q.prime;
  int d = q.poly.dims();
  NormalizedLaurent norm = laurent_normalize(q.poly, p);
  ModpLaurent fbar = mod_p_reduce(norm.unit, p);

  LambdaResult out;
  if (d == 1) {
    out.lambda_Q = ord_T_d1(fbar);
    out.lambda_tower = out.lambda_Q - 1;
    if (out.lambda_Q > 0)
      out.certificate.push_back({Exponents{1}, static_cast<int>(out.lambda_Q)});
    return out;
  }

  auto divide_over_box = [&](int b) {
    std::vector<std::pair<Exponents, int>> cert;
    long total = 0;
    ModpLaurent rem = fbar;
    // Primitive vectors up to sign: first nonzero component positive.
    Exponents a(static_cast<std::size_t>(d), 0);
    std::vector<Exponents> candidates;
    auto enumerate = [&](auto&& self, std::size_t pos) -> void {
      if (pos == a.size()) {
        int g = 0;
        bool nonzero = false, leading_positive = false, decided = false;
        for (auto v : a) {
          if (v != 0 && !decided) {
            leading_positive = v > 0;
            decided = true;
          }
          if (v != 0) nonzero = true;
          g = std::gcd(g, std::abs(static_cast<int>(v)));
        }
        if (nonzero && leading_positive && g == 1) candidates.push_back(a);
        return;
      }
      for (int v = -b; v <= b; ++v) {
        a[pos] = v;
        self(self, pos + 1);
      }
      a[pos] = 0;
    };
    enumerate(enumerate, 0);
    for (const auto& cand : candidates) {
      int mult = trial_divide_sigma(rem, cand);
      if (mult > 0) {
        cert.push_back({cand, mult});
        total += mult;
        ModpLaurent divisor(d, p);
        divisor.add_term(cand, 1);
        divisor.add_term(Exponents(cand.size(), 0), p - 1);
        for (int i = 0; i < mult; ++i)
          rem = *divide_exact(rem.monomial_primitive_part(),
                              divisor.monomial_primitive_part());
      }
    }
    return std::pair{cert, total};
  };

  auto [cert, total] = divide_over_box(box);
  out.certificate = cert;
  out.lambda_Q = total;
  out.lambda_tower = total;
  out.box_used = box;

  // Cross-check lambda against the valuation-sum growth fit.
  std::size_t need = static_cast<std::size_t>(2 * d + 2);
  std::vector<std::pair<long, Rational>> sums;
  bool vanished = false;
  for (std::uint32_t n = 1; n <= need + 1 && !vanished; ++n) {
    ValuationSum s = valuation_sum(q, n, jobs);
    if (s.vanished)
      vanished = true;
    else
      sums.push_back({static_cast<long>(n), s.sum});
  }
  long fitted = -1;
  if (!vanished && sums.size() >= need) {
    for (std::size_t start = 0; start + need <= sums.size(); ++start) {
      std::vector<std::pair<long, Rational>> window(sums.begin() + start, sums.end());
      GrowthFit fit = fit_growth(window, p, d);
      if (fit.solvable && fit.consistent && fit.lambda.get_den() == 1) {
        fitted = fit.lambda.get_num().get_si();
        break;
      }
    }
  }
  out.lambda_fit = fitted;
  if (fitted >= 0 && fitted != out.lambda_Q) {
    auto [cert2, total2] = divide_over_box(2 * box);
    out.certificate = cert2;
    out.lambda_Q = total2;
    out.lambda_tower = total2;
    out.box_used = 2 * box;
  }
  out.cross_check_ok = fitted < 0 || fitted == out.lambda_Q;
  return out;
}

IwasawaReport tower_report(const WeightedGraph& g, const ZdVoltage& alpha,
                           std::uint32_t p, std::uint32_t nmax, int box, int jobs) {
  ValidationReport vr = validate_graph(g);
  if (!vr.ok) throw input_error("tower_report: " + vr.failure);
  if (!tower_is_connected(g, alpha, p))
    throw input_error("tower_report: tower layers are disconnected mod p");

  IwasawaReport report;
  report.p = p;
  report.d = alpha.dims();
  report.nmax = nmax;
  report.q = char_element_direct(g, alpha, p);
  report.q_zero = report.q.poly.is_zero();

  Rational kappa0 = kappa_matrix_tree(g);
  report.table.assign(nmax + 1, LayerRow{});
  std::vector<std::vector<std::string>> vanishing(nmax + 1);
  parallel_for_index(nmax + 1, jobs, [&](std::size_t ni) {
    std::uint32_t n = static_cast<std::uint32_t>(ni);
    LayerRow row;
    row.n = n;
    Cover layer = tower_layer(g, alpha, p, n);
    row.vertices = static_cast<std::size_t>(layer.graph.vertex_count());
    row.kappa_mt = kappa_matrix_tree(layer.graph);
    if (n == 0) {
      row.kappa_product = kappa0;
    } else {
      std::int64_t modulus = prime_power(p, n);
      CyclotomicNumber prod = CyclotomicNumber::from_rational(p, Rational(1));
      std::size_t total = 1;
      for (int i = 0; i < alpha.dims(); ++i) total *= static_cast<std::size_t>(modulus);
      std::vector<std::uint32_t> k(static_cast<std::size_t>(alpha.dims()), 0);
      for (std::size_t idx = 1; idx < total; ++idx) {
        std::size_t rest = idx;
        for (int i = 0; i < alpha.dims(); ++i) {
          k[static_cast<std::size_t>(i)] =
              static_cast<std::uint32_t>(rest % static_cast<std::size_t>(modulus));
          rest /= static_cast<std::size_t>(modulus);
        }
        CyclotomicNumber value = eval_at_tuple(report.q.poly, p, n, k);
        if (value.is_zero()) {
          std::string s = "(";
          for (std::size_t i = 0; i < k.size(); ++i)
            s += (i ? "," : "") + std::to_string(k[i]);
          vanishing[ni].push_back(s + ")");
        }
        prod *= value;
      }
      if (!prod.is_rational())
        throw consistency_error("tower layer " + std::to_string(n) +
                                ": character product is not rational");
      Rational kappa = kappa0 * prod.rational_value();
      Rational denom(1);
      for (int i = 0; i < alpha.dims(); ++i)
        denom *= Rational(static_cast<unsigned long>(modulus));
      kappa /= denom;
      row.kappa_product = kappa;
    }
    if (row.kappa_mt != row.kappa_product)
      throw consistency_error(
          "tower layer " + std::to_string(n) + ": matrix-tree kappa " +
          rational_str(row.kappa_mt) + " differs from product-formula kappa " +
          rational_str(row.kappa_product));
    row.kappa_zero = row.kappa_mt == 0;
    if (!row.kappa_zero) row.v_p = val_p_rational(row.kappa_mt, p).value();
    report.table[ni] = row;
  });

  for (std::size_t ni = 0; ni < report.table.size(); ++ni) {
    if (report.table[ni].kappa_zero) {
      ZeroCaseReport zc;
      zc.first_zero_layer = report.table[ni].n;
      zc.vanishing_characters = vanishing[ni];
      zc.nonzero_q = !report.q_zero;
      report.zero_case = zc;
      return report;
    }
  }

  report.mu = mu_invariant(report.q);
  report.lambda = lambda_invariant(report.q, box, jobs);

  std::vector<std::pair<long, Rational>> points;
  for (const LayerRow& row : report.table)
    points.push_back({static_cast<long>(row.n), row.v_p});
  // Held-out layers past nmax via the recurrence identity; no explicit covers.
  Rational v0 = report.table[0].v_p;
  std::size_t want = static_cast<std::size_t>(2 * report.d + 3);
  for (std::uint32_t n = nmax + 1; points.size() < want && n <= nmax + 4; ++n) {
    ValuationSum s = valuation_sum(report.q, n, jobs);
    if (s.vanished) break;
    Rational v = v0 - Rational(report.d * static_cast<long>(n)) + s.sum;
    report.extended.push_back({static_cast<long>(n), v});
    points.push_back({static_cast<long>(n), v});
  }
  Rational lambda_tower(report.lambda.lambda_tower);
  std::size_t solve_count = static_cast<std::size_t>(2 * (report.d - 1) + 1);
  for (std::size_t start = 0; start + solve_count < points.size(); ++start) {
    std::vector<std::pair<long, Rational>> window(points.begin() + start, points.end());
    GrowthFit fit = fit_growth_pinned(window, p, report.d, report.mu, lambda_tower);
    if (fit.solvable && fit.consistent) {
      report.fit = fit;
      report.stable_from = points[start].first;
      report.closed_form_ok = true;
      break;
    }
  }
  if (report.d == 1) {
    // phi(p^n) >= lambda_Q gives a provable stabilization layer.
    long lam = report.lambda.lambda_Q;
    std::uint32_t n = 0;
    while (static_cast<long>(prime_power_totient(p, n)) < lam && n < 64) ++n;
    report.stable_from_provable = n;
  }
  return report;
}

KidaReport kida_verify(const WeightedGraph& g, const ZdVoltage& alpha,
                       std::uint32_t p, const FiniteGroup& group,
                       const FiniteVoltage& beta, int box, int jobs) {
  ValidationReport vr = validate_graph(g);
  if (!vr.ok) throw input_error("kida_verify: " + vr.failure);
  KidaReport report;
  report.degree = group.size();
  report.d = alpha.dims();
  std::uint32_t deg = group.size();
  while (deg > 1 && deg % p == 0) deg /= p;
  if (deg != 1) throw input_error("kida_verify: [Y:X] is not a power of p");

  auto fail = [&](const std::string& why) {
    report.hypotheses_ok = false;
    report.hypothesis_failure = why;
    return report;
  };

  if (!cover_is_connected(g, group, beta)) return fail("Y = X(G, beta) is disconnected");

  // Galois product structure of Y_n over X: the combined voltages must
  // generate G x Gamma_1; for p-groups that settles every layer (Frattini).
  // Failing this is exactly Y containing a tower layer as a subcover, and it
  // is also equivalent to some Y_n disconnecting.
  {
    FiniteGroup gamma1 = FiniteGroup::abelian(
        std::vector<std::uint32_t>(static_cast<std::size_t>(alpha.dims()), p));
    FiniteGroup product = direct_product(group, gamma1);
    std::vector<std::uint32_t> reduced = alpha.reduced(gamma1, p, 1);
    FiniteVoltage combined;
    for (std::size_t k = 0; k < beta.per_pair.size(); ++k)
      combined.per_pair.push_back(beta.per_pair[k] * gamma1.size() + reduced[k]);
    if (generated_subgroup(product, net_voltages(g, product, combined)).size() !=
        product.size())
      return fail("Y_n/X lacks the full G x Gamma_n Galois structure");
  }

  Cover y = derived_cover(g, group, beta);
  ZdVoltage alpha_y = pullback(y, alpha);
  if (!tower_is_connected(y.graph, alpha_y, p))
    return fail("tower over Y is disconnected mod p");

  CharElement qx = char_element_direct(g, alpha, p);
  CharElement qy = char_element_direct(y.graph, alpha_y, p);
  if (qy.poly.is_zero()) return fail("characteristic element of Y vanishes");
  if (kappa_matrix_tree(y.graph) == 0) return fail("kappa(Y) = 0");
  if (valuation_sum(qy, 1, jobs).vanished)
    return fail("kappa(Y_1) = 0 (vanishing evaluation)");

  report.hypotheses_ok = true;
  report.mu_x = mu_invariant(qx);
  report.mu_y = mu_invariant(qy);
  LambdaResult lx = lambda_invariant(qx, box, jobs);
  LambdaResult ly = lambda_invariant(qy, box, jobs);
  report.lambda_x = lx.lambda_tower;
  report.lambda_y = ly.lambda_tower;

  bool mu_equiv = (report.mu_x == 0) == (report.mu_y == 0);
  if (!mu_equiv) {
    report.relation_holds = false;
  } else if (report.mu_x != 0) {
    report.relation_holds = true;  // the mu-equivalence is the whole statement
  } else if (report.d >= 2) {
    report.relation_holds =
        report.lambda_y == static_cast<long>(report.degree) * report.lambda_x;
  } else {
    report.relation_holds =
        report.lambda_y ==
        static_cast<long>(report.degree) * (report.lambda_x + 1) - 1;
  }
  return report;
}

}  // namespace iwagraph
