#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "iwagraph/arborescence.hpp"
#include "iwagraph/complexity.hpp"

using namespace iwagraph;
using namespace iwagraph::testfix;

TEST_SUITE("complexity") {

TEST_CASE("matrix-tree kappa on the fixtures") {
  // Triangle with W = [[0,b,a],[b,0,c],[a,c,0]]: kappa = ab + bc + ca.
  CHECK(kappa_matrix_tree(triangle(2, 3, 5)) == 31);
  CHECK(kappa_matrix_tree(triangle(1, 1, 1)) == 3);

  WeightedGraph single;
  single.add_vertex("v");
  CHECK(kappa_matrix_tree(single) == 1);

  // Doubled 4-cycle: 4 tree shapes, each picking 3 doubled edges.
  Cover layer2 = tower_layer(bouquet2(1, 1), bouquet2_alpha_d1(), 2, 2);
  CHECK(kappa_matrix_tree(layer2.graph) == 32);

  WeightedGraph asym;
  int a = asym.add_vertex("a"), b = asym.add_vertex("b");
  asym.add_edge(a, b, Rational(1), Rational(2));
  CHECK_THROWS(kappa_matrix_tree(asym));
}

TEST_CASE("matrix-tree equals arborescence enumeration on random graphs") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    WeightedGraph g = random_connected(rng, 6);
    CHECK(kappa_matrix_tree(g) == enumerate_arborescences(g, 0).weight_sum);
  }
}

TEST_CASE("cofactor index does not matter") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    WeightedGraph g = random_connected(rng, 5);
    Rational base = kappa_matrix_tree(g, 0);
    for (int k = 1; k < g.vertex_count(); ++k)
      CHECK(kappa_matrix_tree(g, static_cast<std::size_t>(k)) == base);
  }
}

TEST_CASE("full laplacian determinant vanishes") {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    WeightedGraph g = random_connected(rng, 5);
    Matrix<Rational> w = g.weighted_matrix();
    Matrix<Rational> d = g.degree_matrix();
    std::size_t m = w.rows();
    Matrix<Rational> lap(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) lap.at(i, j) = d.at(i, j) - w.at(i, j);
    CHECK(bareiss_determinant(lap) == 0);
  }
}

TEST_CASE("character matrices") {
  FiniteGroup z2 = FiniteGroup::abelian({2});
  std::vector<Character> chars = all_characters(z2, 2);
  REQUIRE(chars.size() == 2);
  const Character& trivial = chars[0];
  const Character& sign = chars[1];
  CHECK(trivial.is_trivial());
  CHECK(!sign.is_trivial());

  // Trivial character reproduces W(X).
  WeightedGraph k3 = triangle(1, 1, 1);
  FiniteVoltage av{{0, 0, 1}};
  Matrix<CyclotomicNumber> w1 = character_matrix(k3, z2, av, trivial);
  Matrix<Rational> w = k3.weighted_matrix();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(w1.at(i, j) == CyclotomicNumber::from_rational(2, w.at(i, j)));

  // Nontrivial character flips the sign of the voltage-1 pair only.
  Matrix<CyclotomicNumber> ws = character_matrix(k3, z2, av, sign);
  CHECK(ws.at(0, 1) == CyclotomicNumber::from_rational(2, Rational(1)));
  CHECK(ws.at(1, 2) == CyclotomicNumber::from_rational(2, Rational(1)));
  CHECK(ws.at(0, 2) == CyclotomicNumber::from_rational(2, Rational(-1)));
  CHECK(ws.at(2, 0) == CyclotomicNumber::from_rational(2, Rational(-1)));

  // Two-loop bouquet: every dart flips, so the 1x1 entry is -2(a+b).
  WeightedGraph b2 = bouquet2(3, 4);
  Matrix<CyclotomicNumber> wb =
      character_matrix(b2, z2, FiniteVoltage{{1, 1}}, sign);
  CHECK(wb.at(0, 0) == CyclotomicNumber::from_rational(2, Rational(-14)));
}

TEST_CASE("h values") {
  FiniteGroup z2 = FiniteGroup::abelian({2});
  std::vector<Character> chars = all_characters(z2, 2);

  WeightedGraph b2 = bouquet2(3, 4);
  FiniteVoltage ab{{1, 1}};
  CHECK(h_value(b2, z2, ab, chars[0]).is_zero());
  CHECK(h_value(b2, z2, ab, chars[1]) ==
        CyclotomicNumber::from_rational(2, Rational(28)));  // 4(a+b)

  // det [[2,-1,1],[-1,2,-1],[1,-1,2]] = 4; cross-checked below against the
  // spanning-tree count of the 6-cycle cover.
  WeightedGraph k3 = triangle(1, 1, 1);
  FiniteVoltage ak{{0, 0, 1}};
  CHECK(h_value(k3, z2, ak, chars[1]) ==
        CyclotomicNumber::from_rational(2, Rational(4)));
}

TEST_CASE("conjugate characters give Galois-conjugate h values") {
  WeightedGraph k3 = triangle(2, 3, 5);
  FiniteGroup z4 = FiniteGroup::abelian({4});
  FiniteVoltage av{{1, 0, 3}};
  for (const Character& psi : all_characters(z4, 2)) {
    CyclotomicNumber h = h_value(k3, z4, av, psi);
    CyclotomicNumber hbar = h_value(k3, z4, av, psi.conjugate());
    // Same valuation and the product is rational (fixed by conjugation).
    CHECK(h.valuation() == hbar.valuation());
    CHECK((h * hbar).is_rational());
  }
}

TEST_CASE("product formula agrees with the cover determinant") {
  FiniteGroup z2 = FiniteGroup::abelian({2});

  ProductFormulaResult b2 = product_formula_kappa(bouquet2(1, 1), z2, FiniteVoltage{{1, 1}});
  CHECK(b2.kappa_base == 1);
  CHECK(b2.kappa_cover_product == 4);
  CHECK(b2.h_values.size() == 1);
  CHECK(b2.h_values[0].value == CyclotomicNumber::from_rational(2, Rational(8)));

  ProductFormulaResult zero =
      product_formula_kappa(bouquet2(1, -1), z2, FiniteVoltage{{1, 1}});
  CHECK(zero.kappa_cover_product == 0);
  CHECK(zero.vanishing.size() == 1);

  ProductFormulaResult k3 =
      product_formula_kappa(triangle(1, 1, 1), z2, FiniteVoltage{{0, 0, 1}});
  CHECK(k3.kappa_base == 3);
  CHECK(k3.kappa_cover_product == 6);  // the 6-cycle has 6 spanning trees
  CHECK(k3.kappa_cover_direct == 6);
  CHECK(enumerate_arborescences(derived_cover(triangle(1, 1, 1), z2,
                                              FiniteVoltage{{0, 0, 1}})
                                    .graph,
                                0)
            .weight_sum == 6);
}

TEST_CASE("product formula across the group battery") {
  std::vector<FiniteGroup> groups;
  groups.push_back(FiniteGroup::abelian({2}));
  groups.push_back(FiniteGroup::abelian({3}));
  groups.push_back(FiniteGroup::abelian({4}));
  groups.push_back(FiniteGroup::abelian({2, 2}));

  struct Case {
    WeightedGraph g;
    ZdVoltage alpha;
  };
  std::vector<Case> cases;
  cases.push_back({bouquet2(1, 1), bouquet2_alpha_d1()});
  cases.push_back({bouquet2(2, 6), bouquet2_alpha_d1()});
  cases.push_back({triangle(1, 1, 1), triangle_alpha()});
  cases.push_back({triangle(2, 3, 5), triangle_alpha()});
  cases.push_back({bouquet4(1, 1, 1, 2), bouquet4_alpha()});

  for (const auto& c : cases) {
    for (const FiniteGroup& g : groups) {
      // Reduce the Z^d voltage diagonally into the group.
      std::vector<std::uint32_t> per_pair;
      for (std::size_t k = 0; k < c.alpha.pairs(); ++k) {
        const Exponents& v = c.alpha.on_pair(k);
        std::vector<std::uint32_t> coords;
        const auto& orders = g.abelian_orders();
        for (std::size_t r = 0; r < orders.size(); ++r) {
          std::int64_t x = v[r % v.size()] % static_cast<std::int64_t>(orders[r]);
          coords.push_back(static_cast<std::uint32_t>((x + orders[r]) % orders[r]));
        }
        per_pair.push_back(g.abelian_element(coords));
      }
      // product_formula_kappa throws on any two-path disagreement.
      ProductFormulaResult r = product_formula_kappa(c.g, g, FiniteVoltage{per_pair});
      CHECK(r.kappa_cover_product == r.kappa_cover_direct);
    }
  }
}

TEST_CASE("three-term determinant identity") {
  FiniteGroup trivial = FiniteGroup::abelian({1});
  Character triv(trivial, 2, {0});
  CHECK(three_term_check(triangle(1, 1, 1), trivial, FiniteVoltage{{0, 0, 0}}, triv));

  FiniteGroup z2 = FiniteGroup::abelian({2});
  for (const Character& psi : all_characters(z2, 2)) {
    CHECK(three_term_check(triangle(3, 2, 5), z2, FiniteVoltage{{0, 0, 1}}, psi));
    CHECK(three_term_check(bouquet2(1, 1), z2, FiniteVoltage{{1, 1}}, psi));
  }
  FiniteGroup z4 = FiniteGroup::abelian({4});
  for (const Character& psi : all_characters(z4, 2))
    CHECK(three_term_check(triangle(2, 3, 5), z4, FiniteVoltage{{1, 0, 3}}, psi));
  FiniteGroup z3 = FiniteGroup::abelian({3});
  for (const Character& psi : all_characters(z3, 3))
    CHECK(three_term_check(triangle(1, 2, 2), z3, FiniteVoltage{{0, 1, 2}}, psi));
}

}  // TEST_SUITE
