#include <doctest.h>

#include <random>

#include "iwagraph/cyclotomic.hpp"
#include "iwagraph/laurent.hpp"
#include "iwagraph/modp_laurent.hpp"
#include "iwagraph/poly.hpp"
#include "iwagraph/rational.hpp"

using namespace iwagraph;

namespace {

// Independent resultant oracle: plain Euclidean remainder sequence over Q.
Rational resultant_euclid(Poly<Rational> a, Poly<Rational> b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  if (a.degree() < b.degree()) {
    Rational r = resultant_euclid(b, a);
    return (a.degree() & 1) && (b.degree() & 1) ? -r : r;
  }
  if (b.degree() == 0) {
    Rational r(1);
    for (long i = 0; i < a.degree(); ++i) r *= b.coeff(0);
    return r;
  }
  auto [q, rem] = a.divmod(b);
  if (rem.is_zero()) return Rational(0);
  Rational scale(1);
  for (long i = 0; i < a.degree() - rem.degree(); ++i) scale *= b.leading();
  Rational sub = resultant_euclid(b, rem);
  Rational r = scale * sub;
  return (a.degree() & 1) && (b.degree() & 1) ? -r : r;
}

Poly<Rational> random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6), coeff(-9, 9);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = Rational(coeff(rng));
  return Poly<Rational>(std::move(c));
}

CyclotomicNumber random_cyclo(std::mt19937& rng, std::uint32_t p, std::uint32_t level) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  CyclotomicNumber acc = CyclotomicNumber::from_rational(p, Rational(0), level);
  CyclotomicNumber z = CyclotomicNumber::zeta(p, level);
  std::size_t phi = prime_power_totient(p, level);
  for (std::size_t k = 0; k < phi; ++k)
    acc += z.pow(static_cast<long>(k)).scaled(Rational(coeff(rng)));
  return acc;
}

LaurentPolynomial random_laurent(std::mt19937& rng, int dims) {
  std::uniform_int_distribution<int> nterms(1, 5), expo(-3, 3), coeff(-6, 6);
  LaurentPolynomial f(dims);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Exponents e(static_cast<std::size_t>(dims));
    for (auto& x : e) x = expo(rng);
    f.add_term(e, Rational(coeff(rng)));
  }
  return f;
}

}  // namespace

TEST_SUITE("exact-algebra") {

TEST_CASE("p-adic valuation of rationals") {
  CHECK(val_p_rational(Rational(12), 2).value() == 2);
  CHECK(val_p_rational(Rational(0), 5).is_infinite());
  Rational half(1);
  half /= 2;
  CHECK(val_p_rational(half, 2).value() == -1);
  CHECK(val_p_rational(Rational(-24), 2).value() == 3);
  CHECK(val_p_rational(parse_rational("9/4"), 3).value() == 2);
}

TEST_CASE("valuation arithmetic is absorbing at infinity") {
  Valuation inf = Valuation::infinity();
  Valuation one = Valuation::of(Rational(1));
  CHECK((inf + one).is_infinite());
  CHECK((one + one).value() == 2);
  CHECK(one < inf);
  CHECK(!(inf < one));
}

TEST_CASE("rational parsing round trip and rejects") {
  CHECK(rational_str(parse_rational("-6/4")) == "-3/2");
  CHECK(rational_str(parse_rational("7")) == "7");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("subresultant resultant matches the Euclidean oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Poly<Rational> a = random_poly(rng), b = random_poly(rng);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(resultant(a, b) == resultant_euclid(a, b));
  }
}

TEST_CASE("cyclotomic norms") {
  CyclotomicNumber z4 = CyclotomicNumber::zeta(2, 2);
  CyclotomicNumber one = CyclotomicNumber::from_rational(2, Rational(1), 2);
  CHECK((z4 - one).norm() == 2);
  CHECK(CyclotomicNumber::from_rational(3, Rational(0), 1).norm() == 0);
  CHECK(CyclotomicNumber::from_rational(3, Rational(3), 1).norm() == 9);
}

TEST_CASE("extended valuation on cyclotomic numbers") {
  auto vp_zeta_minus_one = [](std::uint32_t p, std::uint32_t n) {
    CyclotomicNumber z = CyclotomicNumber::zeta(p, n);
    CyclotomicNumber one = CyclotomicNumber::from_rational(p, Rational(1), n);
    return (z - one).valuation();
  };
  CHECK(vp_zeta_minus_one(2, 1).value() == 1);
  Rational half(1);
  half /= 2;
  CHECK(vp_zeta_minus_one(2, 2).value() == half);
  CHECK(vp_zeta_minus_one(3, 1).value() == half);
  // v_p(zeta_{p^n} - 1) = 1/(p^{n-1}(p-1)) for p in {2,3}, n <= 4.
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      Rational expected(1);
      expected /= Rational(static_cast<unsigned long>(prime_power_totient(p, n)));
      CHECK(vp_zeta_minus_one(p, n).value() == expected);
    }
  }
  CHECK(CyclotomicNumber::from_rational(2, Rational(0), 2).valuation().is_infinite());
}

TEST_CASE("valuation is multiplicative on random pairs") {
  std::mt19937 rng(5);
  int done = 0;
  while (done < 100) {
    std::uint32_t p = (done % 2 == 0) ? 2 : 3;
    std::uint32_t level = 1 + static_cast<std::uint32_t>(done % 2);
    CyclotomicNumber x = random_cyclo(rng, p, level);
    CyclotomicNumber y = random_cyclo(rng, p, level);
    if (x.is_zero() || y.is_zero()) continue;
    Valuation lhs = (x * y).valuation();
    Valuation rhs = x.valuation() + y.valuation();
    CHECK(lhs == rhs);
    ++done;
  }
}

TEST_CASE("lift then lower is the identity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint32_t p = trial % 2 ? 2 : 3;
    std::uint32_t low = static_cast<std::uint32_t>(trial % 3);
    std::uint32_t high = low + 1 + static_cast<std::uint32_t>(trial % 2);
    CyclotomicNumber x = random_cyclo(rng, p, low);
    CHECK(x.lift_to_level(high).lower_to_level(low) == x);
  }
  // A genuine level-2 element does not drop to level 1.
  CHECK_THROWS(CyclotomicNumber::zeta(2, 2).lower_to_level(1));
}

TEST_CASE("inverse and powers of roots of unity") {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      CyclotomicNumber z = CyclotomicNumber::zeta(p, n);
      long order = 1;
      for (std::uint32_t i = 0; i < n; ++i) order *= p;
      CHECK(z.pow(order) == CyclotomicNumber::from_rational(p, Rational(1)));
      CHECK(z.pow(-1) * z == CyclotomicNumber::from_rational(p, Rational(1)));
    }
  }
}

TEST_CASE("from_polynomial agrees with generator powers") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      long order = 1;
      for (std::uint32_t i = 0; i < n; ++i) order *= p;
      std::vector<Rational> raw(static_cast<std::size_t>(order));
      CyclotomicNumber direct = CyclotomicNumber::from_rational(p, Rational(0), n);
      CyclotomicNumber z = CyclotomicNumber::zeta(p, n);
      for (std::size_t k = 0; k < raw.size(); ++k) {
        raw[k] = Rational(coeff(rng));
        direct += z.pow(static_cast<long>(k)).scaled(raw[k]);
      }
      CHECK(CyclotomicNumber::from_polynomial(p, n, raw) == direct);
    }
  }
}

TEST_CASE("laurent evaluation at roots of unity") {
  LaurentPolynomial f = LaurentPolynomial::monomial(1, {1}, Rational(1));
  f.add_term({0}, Rational(-2));
  f.add_term({-1}, Rational(1));  // u - 2 + u^-1
  CyclotomicNumber at_one =
      laurent_eval(f, {CyclotomicNumber::from_rational(2, Rational(1))});
  CHECK(at_one.is_zero());
  CyclotomicNumber at_minus_one = laurent_eval(f, {CyclotomicNumber::zeta(2, 1)});
  CHECK(at_minus_one == CyclotomicNumber::from_rational(2, Rational(-4)));

  LaurentPolynomial g = LaurentPolynomial::monomial(2, {1, 1}, Rational(1));
  g.add_term({0, 0}, Rational(-1));  // u1 u2 - 1
  CyclotomicNumber z4 = CyclotomicNumber::zeta(2, 2);
  CHECK(laurent_eval(g, {z4, z4}) == CyclotomicNumber::from_rational(2, Rational(-2)));

  CHECK_THROWS(laurent_eval(f, {CyclotomicNumber::from_rational(2, Rational(0))}));
}

TEST_CASE("laurent evaluation is a ring homomorphism") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    int d = 1 + trial % 2;
    LaurentPolynomial f = random_laurent(rng, d), g = random_laurent(rng, d);
    std::vector<CyclotomicNumber> zeta;
    CyclotomicNumber z = CyclotomicNumber::zeta(2, 2);
    std::uniform_int_distribution<int> expo(0, 3);
    for (int i = 0; i < d; ++i) zeta.push_back(z.pow(expo(rng)));
    CHECK(laurent_eval(f * g, zeta) == laurent_eval(f, zeta) * laurent_eval(g, zeta));
    CHECK(laurent_eval(f + g, zeta) == laurent_eval(f, zeta) + laurent_eval(g, zeta));
  }
}

TEST_CASE("laurent content normalization") {
  LaurentPolynomial f = LaurentPolynomial::monomial(1, {1}, Rational(2));
  f.add_term({0}, Rational(-4));
  f.add_term({-1}, Rational(2));  // 2u - 4 + 2u^-1
  NormalizedLaurent n2 = laurent_normalize(f, 2);
  CHECK(n2.mu == 1);
  LaurentPolynomial expected = LaurentPolynomial::monomial(1, {1}, Rational(1));
  expected.add_term({0}, Rational(-2));
  expected.add_term({-1}, Rational(1));
  CHECK(n2.unit == expected);

  NormalizedLaurent n3 = laurent_normalize(expected, 3);
  CHECK(n3.mu == 0);
  CHECK(n3.unit == expected);

  LaurentPolynomial h = LaurentPolynomial::monomial(1, {1}, parse_rational("1/2"));
  h.add_term({0}, Rational(-1));  // u/2 - 1
  NormalizedLaurent nh = laurent_normalize(h, 2);
  CHECK(nh.mu == -1);
  LaurentPolynomial hx = LaurentPolynomial::monomial(1, {1}, Rational(1));
  hx.add_term({0}, Rational(-2));
  CHECK(nh.unit == hx);

  CHECK_THROWS(laurent_normalize(LaurentPolynomial::zero(1), 2));

  // Round trip p^mu * F0 = F on random inputs.
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentPolynomial r = random_laurent(rng, 1 + trial % 2);
    if (r.is_zero()) continue;
    NormalizedLaurent nr = laurent_normalize(r, 2);
    CHECK(nr.unit.scaled(rational_pow(2, nr.mu)) == r);
  }
}

TEST_CASE("mod-p reduction") {
  LaurentPolynomial f = LaurentPolynomial::monomial(1, {1}, Rational(1));
  f.add_term({0}, Rational(-2));
  f.add_term({-1}, Rational(1));
  ModpLaurent r = mod_p_reduce(f, 2);
  ModpLaurent expected(1, 2);
  expected.add_term({1}, 1);
  expected.add_term({-1}, 1);
  CHECK(r == expected);

  CHECK(mod_p_reduce(LaurentPolynomial::monomial(1, {1}, Rational(3)), 3).is_zero());

  LaurentPolynomial g = LaurentPolynomial::monomial(2, {1, 0}, Rational(1));
  g.add_term({0, 1}, Rational(1));
  g.add_term({0, 0}, Rational(-2));
  ModpLaurent rg = mod_p_reduce(g, 2);
  ModpLaurent eg(2, 2);
  eg.add_term({1, 0}, 1);
  eg.add_term({0, 1}, 1);
  CHECK(rg == eg);

  CHECK_THROWS(mod_p_reduce(
      LaurentPolynomial::monomial(1, {0}, parse_rational("1/2")), 2));
}

TEST_CASE("order at T for one variable") {
  ModpLaurent g(1, 2);
  g.add_term({1}, 1);
  g.add_term({-1}, 1);  // u + u^-1 = u^-1 (1+T)^2 ... T^2 over F_2
  CHECK(ord_T_d1(g) == 2);

  ModpLaurent c(1, 2);
  c.add_term({0}, 1);
  CHECK(ord_T_d1(c) == 0);

  ModpLaurent h(1, 3);
  h.add_term({1}, 1);
  h.add_term({0}, 2);  // u - 1 = T
  CHECK(ord_T_d1(h) == 1);

  CHECK_THROWS(ord_T_d1(ModpLaurent(1, 2)));
}

TEST_CASE("trial division by u^a - 1") {
  // G = (u1 u2 - 1)(u1 u2^-1 - 1) over F_2.
  ModpLaurent f1(2, 2), f2(2, 2);
  f1.add_term({1, 1}, 1);
  f1.add_term({0, 0}, 1);
  f2.add_term({1, -1}, 1);
  f2.add_term({0, 0}, 1);
  ModpLaurent g = f1 * f2;
  CHECK(trial_divide_sigma(g, {1, 1}) == 1);
  CHECK(trial_divide_sigma(g, {1, -1}) == 1);
  CHECK(trial_divide_sigma(g, {1, 0}) == 0);
  CHECK(trial_divide_sigma(g, {0, 1}) == 0);
  // Invariant under negating a (u^-a - 1 is a unit multiple of u^a - 1).
  CHECK(trial_divide_sigma(g, {-1, -1}) == 1);
  CHECK(trial_divide_sigma(g, {-1, 1}) == 1);
  CHECK_THROWS(trial_divide_sigma(g, {2, 0}));  // trivial mod 2

  ModpLaurent cube = f1 * f1 * f1;
  CHECK(trial_divide_sigma(cube, {1, 1}) == 3);
}

}  // TEST_SUITE
