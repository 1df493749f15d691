#include "doctest.h"

#include <algorithm>

#include "cartdec/group.hpp"
#include "oracles.hpp"

using namespace cartdec;

TEST_CASE("chain orders against exhaustive closure") {
  struct Case {
    Group g;
    std::size_t order;
  };
  std::vector<Case> cases;
  cases.push_back({oracles::a5_natural(), 60});
  cases.push_back({oracles::a6_natural(), 360});
  cases.push_back({oracles::s6_natural(), 720});
  cases.push_back({Group(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})}, "C4"), 4});
  cases.push_back({Group(3), 1});
  cases.push_back({oracles::a6_exotic_a5(), 60});
  for (auto& c : cases) {
    CHECK(c.g.order() == c.order);
    auto closure = oracles::closure(c.g.degree(), c.g.generators());
    CHECK(closure.size() == c.order);
    // membership by chain agrees with membership by enumeration
    for (const Perm& e : closure) CHECK(c.g.contains(e));
  }
}

TEST_CASE("membership negatives") {
  Group a5 = oracles::a5_natural();
  CHECK_FALSE(a5.contains(Perm::from_cycles(5, {{0, 1}})));  // odd, sift fails
  Group a6 = oracles::a6_natural();
  CHECK_FALSE(a6.contains(Perm::from_cycles(6, {{0, 1}})));
}

TEST_CASE("orbits") {
  CHECK(Group(3).orbit(0) == std::vector<Point>{0});
  Group a5 = oracles::a5_natural();
  CHECK(a5.orbit(0).size() == 5);
  Group g(4, {Perm::from_cycles(4, {{0, 1}})});
  CHECK(g.orbit(2) == std::vector<Point>{2});
  CHECK(g.orbits().size() == 3);
}

TEST_CASE("point stabilizer and orbit-stabilizer") {
  Group a5 = oracles::a5_natural();
  Group st = a5.point_stabilizer(0);
  CHECK(st.order() == 12);
  CHECK(BigInt(a5.orbit(0).size()) * st.order() == a5.order());
  for (const Perm& g : st.generators()) CHECK(g[0] == 0);

  // stabilizer of a fixed point is the whole group
  Group fix(4, {Perm::from_cycles(4, {{0, 1}})});
  CHECK(fix.point_stabilizer(3).same_group_as(fix));
}

TEST_CASE("orbit sizes divide the order") {
  Group s6 = oracles::s6_natural();
  Group sub(6, {Perm::from_cycles(6, {{0, 1, 2}}), Perm::from_cycles(6, {{3, 4}})});
  for (auto& orb : sub.orbits())
    CHECK(sub.order() % orb.size() == 0);
  CHECK(s6.is_transitive());
  CHECK_FALSE(sub.is_transitive());
}

TEST_CASE("deterministic chains") {
  Group a = oracles::a6_natural();
  Group b = oracles::a6_natural();
  CHECK(a.chain().base() == b.chain().base());
  auto ea = a.elements(1000);
  auto eb = b.elements(1000);
  REQUIRE(ea);
  REQUIRE(eb);
  CHECK(*ea == *eb);
}

TEST_CASE("element enumeration matches closure") {
  Group g = oracles::a6_point_stab_a5();
  auto elems = g.elements(100);
  REQUIRE(elems);
  auto clo = oracles::closure(6, g.generators());
  CHECK(elems->size() == clo.size());
  std::unordered_set<Perm, PermHash> s(clo.begin(), clo.end());
  for (const Perm& e : *elems) CHECK(s.count(e) == 1);
}

TEST_CASE("shadows evaluate the generator homomorphism") {
  // shadow: the isomorphism C4 on 4 points -> C4 on 8 points (doubled)
  Perm g4 = Perm::from_cycles(4, {{0, 1, 2, 3}});
  Perm g8 = Perm::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  Group g(4, {g4}, {g8}, "C4");
  Perm sq = g4 * g4;
  CHECK(g.shadow_of(sq) == g8 * g8);
  CHECK(g.shadow_of(g4.inverse()) == g8.inverse());
}

TEST_CASE("normality / normal closure / core") {
  Group a6 = oracles::a6_natural();
  Group a5 = oracles::a6_point_stab_a5();
  Group v4(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  Group s4(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(is_normal(s4, v4));
  CHECK_FALSE(is_normal(a6, a5));

  // closure of a 3-cycle in A6 is A6
  Group cl = normal_closure(a6, {Perm::from_cycles(6, {{0, 1, 2}})});
  CHECK(cl.order() == 360);

  CHECK(core(a6, a6).same_group_as(a6));
  // A6 simple: proper core must be trivial
  CHECK(core(a6, a5).order() == 1);
}

TEST_CASE("simplicity certification") {
  CHECK(is_simple(oracles::a5_natural(), 100000) == true);
  CHECK(is_simple(oracles::a6_natural(), 100000) == true);
  CHECK(is_simple(oracles::s6_natural(), 100000) == false);
  Group c4(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(is_simple(c4, 100000) == false);
  CHECK_FALSE(is_simple(oracles::a6_natural(), 10).has_value());  // over budget
}

TEST_CASE("seeded chain certificate") {
  Group a5 = oracles::a5_natural();
  Group stab = a5.point_stabilizer(0);
  Chain seeded = Chain::seeded(5, a5.generators(), {}, 0, stab.chain(), BigInt(60));
  CHECK(seeded.order() == 60);
  auto clo = oracles::closure(5, a5.generators());
  for (const Perm& e : clo) CHECK(seeded.contains(e));
  CHECK_FALSE(seeded.contains(Perm::from_cycles(5, {{0, 1}})));
  // wrong expected order must throw
  CHECK_THROWS(Chain::seeded(5, a5.generators(), {}, 0, stab.chain(), BigInt(61)));
}
