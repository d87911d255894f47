#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "iwagraph/char_element.hpp"
#include "iwagraph/complexity.hpp"

using namespace iwagraph;
using namespace iwagraph::testfix;

namespace {

// -(c)(u - 2 + u^-1), the shape of the one-variable fixtures.
LaurentPolynomial neg_c_u_minus2_uinv(const Rational& c) {
  LaurentPolynomial f = LaurentPolynomial::monomial(1, {1}, -c);
  f.add_term({0}, 2 * c);
  f.add_term({-1}, -c);
  return f;
}

// -(a(u1 - 1) + b(u2 - 1) + a(u1^-1 - 1) + b(u2^-1 - 1)): the determinant
// convention det(D - W_tau) fixes this sign, and the evaluation identity
// Q(zeta_psi - 1) = h(psi) = det(D - W_psi) confirms it.
LaurentPolynomial bouquet_d2_form(const Rational& a, const Rational& b) {
  LaurentPolynomial f = LaurentPolynomial::monomial(2, {1, 0}, -a);
  f.add_term({-1, 0}, -a);
  f.add_term({0, 1}, -b);
  f.add_term({0, -1}, -b);
  f.add_term({0, 0}, 2 * (a + b));
  return f;
}

}  // namespace

TEST_SUITE("char-elem") {

TEST_CASE("direct route reproduces the worked examples") {
  CHECK(char_element_direct(bouquet2(1, 1), bouquet2_alpha_d1(), 2).poly ==
        neg_c_u_minus2_uinv(2));
  CHECK(char_element_direct(bouquet2(2, 6), bouquet2_alpha_d1(), 2).poly ==
        neg_c_u_minus2_uinv(8));
  CHECK(char_element_direct(bouquet2(1, -1), bouquet2_alpha_d1(), 2).poly ==
        LaurentPolynomial::zero(1));

  // Triangle: -abc (u - 2 + u^-1).
  CHECK(char_element_direct(triangle(1, 1, 1), triangle_alpha(), 2).poly ==
        neg_c_u_minus2_uinv(1));
  CHECK(char_element_direct(triangle(1, 2, 1), triangle_alpha(), 2).poly ==
        neg_c_u_minus2_uinv(2));
  CHECK(char_element_direct(triangle(3, 2, 5), triangle_alpha(), 2).poly ==
        neg_c_u_minus2_uinv(30));

  CHECK(char_element_direct(bouquet2(1, 1), bouquet2_alpha_d2(), 2).poly ==
        bouquet_d2_form(1, 1));
  CHECK(char_element_direct(bouquet2(3, 5), bouquet2_alpha_d2(), 2).poly ==
        bouquet_d2_form(3, 5));

  // Four loops with two trivial voltages: the trivial loops drop out.
  CHECK(char_element_direct(bouquet4(1, 1, 1, 2), bouquet4_alpha(), 2).poly ==
        bouquet_d2_form(1, 1));
  CHECK(char_element_direct(bouquet4(3, 7, 1, 2), bouquet4_alpha(), 2).poly ==
        bouquet_d2_form(3, 7));
}

TEST_CASE("orientation route agrees and self-checks") {
  WeightedGraph b2 = bouquet2(1, 1);
  CharElement q = char_element_sec5(b2, b2.default_orientation(), bouquet2_alpha_d1(), 2);
  CHECK(q.provenance == CharElement::Route::orientation);
  CHECK(q.poly == neg_c_u_minus2_uinv(2));

  WeightedGraph k3 = triangle(3, 2, 5);
  CHECK(char_element_sec5(k3, k3.default_orientation(), triangle_alpha(), 2).poly ==
        neg_c_u_minus2_uinv(30));

  WeightedGraph b4 = bouquet4(1, 1, 1, 2);
  CHECK(char_element_sec5(b4, b4.default_orientation(), bouquet4_alpha(), 2).poly ==
        bouquet_d2_form(1, 1));
}

TEST_CASE("orientation route on random voltage graphs") {
  std::mt19937 rng(211);
  int done = 0;
  while (done < 30) {
    WeightedGraph g = random_connected(rng, 5);
    if (g.pair_count() > 8) continue;
    int d = 1 + done % 2;
    ZdVoltage alpha = random_voltage(rng, g.pair_count(), d);
    // char_element_sec5 throws if the two routes disagree.
    CharElement q = char_element_sec5(g, g.default_orientation(), alpha, 2);
    CHECK(q.provenance == CharElement::Route::orientation);
    ++done;
  }
}

TEST_CASE("orientation route is orientation independent") {
  WeightedGraph k3 = triangle(3, 2, 5);
  std::vector<int> flipped{1, 2, 4};  // reverse s1 and s3, keep s2
  CharElement a = char_element_sec5(k3, k3.default_orientation(), triangle_alpha(), 2);
  CharElement b = char_element_sec5(k3, flipped, triangle_alpha(), 2);
  CHECK(a.poly == b.poly);

  std::vector<int> bad{0, 1, 2};  // s1 twice
  CHECK_THROWS(char_element_sec5(k3, bad, triangle_alpha(), 2));
}

TEST_CASE("Q vanishes at the trivial character") {
  std::mt19937 rng(223);
  std::vector<CyclotomicNumber> one_d1{CyclotomicNumber::from_rational(2, Rational(1))};
  std::vector<CyclotomicNumber> one_d2(2, CyclotomicNumber::from_rational(2, Rational(1)));
  for (int trial = 0; trial < 15; ++trial) {
    WeightedGraph g = random_connected(rng, 4);
    int d = 1 + trial % 2;
    ZdVoltage alpha = random_voltage(rng, g.pair_count(), d);
    CharElement q = char_element_direct(g, alpha, 2);
    CHECK(laurent_eval(q.poly, d == 1 ? one_d1 : one_d2).is_zero());
  }
}

TEST_CASE("evaluations equal h values for layers up to 3") {
  struct Case {
    WeightedGraph g;
    ZdVoltage alpha;
  };
  std::vector<Case> cases;
  cases.push_back({bouquet2(1, 1), bouquet2_alpha_d1()});
  cases.push_back({triangle(1, 1, 1), triangle_alpha()});
  cases.push_back({triangle(3, 2, 5), triangle_alpha()});
  cases.push_back({bouquet2(1, 1), bouquet2_alpha_d2()});

  for (const auto& c : cases) {
    CharElement q = char_element_direct(c.g, c.alpha, 2);
    std::uint32_t max_n = c.alpha.dims() == 1 ? 3 : 2;
    for (std::uint32_t n = 0; n <= max_n; ++n) {
      std::uint32_t pn = 1;
      for (std::uint32_t i = 0; i < n; ++i) pn *= 2;
      FiniteGroup gamma = FiniteGroup::abelian(std::vector<std::uint32_t>(
          static_cast<std::size_t>(c.alpha.dims()), pn));
      for (const Character& psi : all_characters(gamma, 2)) {
        // Throws on any disagreement with h(psi).
        CyclotomicNumber v = eval_char_element_checked(q, c.g, c.alpha, n, psi);
        if (psi.is_trivial()) CHECK(v.is_zero());
      }
    }
  }
}

TEST_CASE("specific evaluations") {
  CharElement qb2 = char_element_direct(bouquet2(1, 1), bouquet2_alpha_d1(), 2);
  FiniteGroup z2 = FiniteGroup::abelian({2});
  std::vector<Character> chars = all_characters(z2, 2);
  CHECK(eval_char_element(qb2, chars[0]).is_zero());
  CHECK(eval_char_element(qb2, chars[1]) ==
        CyclotomicNumber::from_rational(2, Rational(8)));

  CharElement qk3 = char_element_direct(triangle(1, 1, 1), triangle_alpha(), 2);
  CHECK(eval_char_element(qk3, chars[1]) ==
        CyclotomicNumber::from_rational(2, Rational(4)));
}

TEST_CASE("inversion symmetry for one variable, up to a monomial unit") {
  // Exploratory property: substituting u -> u^-1 fixes Q up to a monomial.
  struct Case {
    WeightedGraph g;
    ZdVoltage alpha;
  };
  std::vector<Case> cases;
  cases.push_back({bouquet2(1, 1), bouquet2_alpha_d1()});
  cases.push_back({triangle(3, 2, 5), triangle_alpha()});
  for (const auto& c : cases) {
    LaurentPolynomial q = char_element_direct(c.g, c.alpha, 2).poly;
    LaurentPolynomial mirrored(1);
    for (const auto& [e, coeff] : q.terms()) mirrored.add_term({-e[0]}, coeff);
    bool plus = false, minus = false;
    for (int shift = -4; shift <= 4; ++shift) {
      LaurentPolynomial shifted = mirrored.shifted({shift});
      if (shifted == q) plus = true;
      LaurentPolynomial negated = -shifted;
      if (negated == q) minus = true;
    }
    CHECK((plus || minus));
  }
}

}  // TEST_SUITE
