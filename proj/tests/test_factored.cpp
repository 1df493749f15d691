#include "doctest.h"

#include "cartdec/factored.hpp"
#include "oracles.hpp"

using namespace cartdec;

TEST_CASE("single factor") {
  FactoredGroup m = FactoredGroup::direct_product({oracles::a5_natural()});
  CHECK(m.k() == 1);
  CHECK(m.ambient().order() == 60);
}

TEST_CASE("A5 x A5") {
  FactoredGroup m =
      FactoredGroup::direct_product({oracles::a5_natural(), oracles::a5_natural()});
  CHECK(m.ambient().order() == 3600);
  CHECK(m.degree() == 10);
  // factors commute
  for (const Perm& a : m.factor(0).generators())
    for (const Perm& b : m.factor(1).generators()) CHECK(a * b == b * a);
}

TEST_CASE("A6^4 has order 360^4") {
  Group a6 = oracles::a6_natural();
  FactoredGroup m = FactoredGroup::direct_product({a6, a6, a6, a6});
  BigInt expect = BigInt(360) * 360 * 360 * 360;
  CHECK(m.ambient().order() == expect);
}

TEST_CASE("sigma projections") {
  Group a5 = oracles::a5_natural();
  FactoredGroup m = FactoredGroup::direct_product({a5, a5});
  // sigma_all of M is M
  CHECK(m.sigma({0, 1}, m.ambient()).same_group_as(m.ambient()));
  // diagonal projects onto the full factor
  std::vector<Perm> diag_gens;
  for (const Perm& g : a5.generators())
    diag_gens.push_back(embed_perm_at(g, 10, 0) * embed_perm_at(g, 10, 5));
  Group diag(10, diag_gens);
  CHECK(diag.order() == 60);
  CHECK(m.sigma_one(0, diag).same_group_as(m.factor(0)));
  // kernel identity: |sigma_I(K)| * |ker| = |K|, kernel of sigma_{all minus i} is T_i
  Group ker = m.sigma({0}, m.factor(0));
  CHECK(ker.same_group_as(m.factor(0)));
}

TEST_CASE("sigma of the two-A5 product restricted to one coordinate") {
  Group a = oracles::a6_point_stab_a5();
  Group b = oracles::a6_exotic_a5();
  Group a6 = oracles::a6_natural();
  FactoredGroup m = FactoredGroup::direct_product({a6, a6});
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) gens.push_back(embed_perm_at(g, 12, 0));
  for (const Perm& g : b.generators()) gens.push_back(embed_perm_at(g, 12, 6));
  Group axb(12, gens);
  CHECK(axb.order() == 3600);
  Group s1 = m.sigma_one(0, axb);
  CHECK(s1.order() == 60);
  CHECK(s1.same_group_as(embed_at(a, 12, 0)));
}

TEST_CASE("sigma is a homomorphism on sampled pairs") {
  Rng rng(7);
  Group a5 = oracles::a5_natural();
  FactoredGroup m = FactoredGroup::direct_product({a5, a5, a5});
  for (int t = 0; t < 20; ++t) {
    Perm x = m.ambient().random_element(rng);
    Perm y = m.ambient().random_element(rng);
    Perm px = m.project_elem(1, x), py = m.project_elem(1, y);
    CHECK(m.project_elem(1, x * y) == px * py);
  }
}

TEST_CASE("sigma rejects non-subgroups") {
  Group a5 = oracles::a5_natural();
  FactoredGroup m = FactoredGroup::direct_product({a5, a5});
  Group s5(10, {Perm::from_cycles(10, {{0, 1}})});
  CHECK_THROWS_AS(m.sigma_one(0, s5), std::invalid_argument);
}

TEST_CASE("simplicity flags") {
  Group a5 = oracles::a5_natural();
  FactoredGroup m = FactoredGroup::direct_product({a5, a5});
  CHECK_FALSE(m.all_factors_simple_or_trusted());
  m.verify_simplicity(100000);
  CHECK(m.simplicity(0) == Simplicity::Verified);
  CHECK(m.all_factors_simple_or_trusted());

  Group c4(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})});
  FactoredGroup mc = FactoredGroup::direct_product({c4, c4});
  mc.verify_simplicity(100000);
  CHECK(mc.simplicity(0) == Simplicity::Failed);
  CHECK_FALSE(mc.all_factors_simple_or_trusted());
}

TEST_CASE("factor permutation of a domain shuffle") {
  Group a5 = oracles::a5_natural();
  FactoredGroup m = FactoredGroup::direct_product({a5, a5});
  // swap the two 5-point domains
  std::vector<Point> img(10);
  for (Point i = 0; i < 5; ++i) {
    img[i] = i + 5;
    img[i + 5] = i;
  }
  auto fp = m.factor_permutation(Perm(std::move(img)));
  REQUIRE(fp);
  CHECK(*fp == Perm::from_cycles(2, {{0, 1}}));
  // a non-block permutation has none
  CHECK_FALSE(m.factor_permutation(Perm::from_cycles(10, {{4, 5}})));
}
