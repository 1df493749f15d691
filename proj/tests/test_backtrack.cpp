#include "doctest.h"

#include "cartdec/backtrack.hpp"
#include "cartdec/rng.hpp"
#include "oracles.hpp"

using namespace cartdec;

TEST_CASE("intersect basics") {
  Group a5 = oracles::a5_natural();
  CHECK(intersect(a5, a5).same_group_as(a5));
  CHECK(intersect(a5, Group(5)).order() == 1);
}

TEST_CASE("the two A5 classes of A6 intersect in order 10") {
  Group a = oracles::a6_point_stab_a5();
  Group b = oracles::a6_exotic_a5();
  Group meet = intersect(a, b);
  CHECK(meet.order() == 10);
  // cross-checked by exhaustive enumeration
  auto ea = oracles::closure(6, a.generators());
  auto eb = oracles::closure(6, b.generators());
  CHECK(oracles::intersection_size(ea, eb) == 10);
  // and the product-size identity |AB| = |A||B|/|A n B|
  CHECK(oracles::product_set_size(ea, eb) == 360);
  CHECK(product_size(a, b) == 360);
}

TEST_CASE("intersection is symmetric and double-coset counting holds") {
  Rng rng(99);
  Group s6 = oracles::s6_natural();
  for (int t = 0; t < 8; ++t) {
    // random small subgroups via a couple of random elements
    Group a(6, {s6.random_element(rng), s6.random_element(rng)});
    Group b(6, {s6.random_element(rng)});
    Group ab = intersect(a, b);
    Group ba = intersect(b, a);
    CHECK(ab.same_group_as(ba));
    auto ea = oracles::closure(6, a.generators());
    auto eb = oracles::closure(6, b.generators());
    CHECK(BigInt(oracles::intersection_size(ea, eb)) == ab.order());
    CHECK(BigInt(oracles::product_set_size(ea, eb)) == product_size(a, b));
  }
}

TEST_CASE("set stabilizer") {
  Group a6 = oracles::a6_natural();
  // the whole point set: the group itself
  CHECK(set_stabilizer(a6, {0, 1, 2, 3, 4, 5}).same_group_as(a6));
  // a 2-subset: oracle = filter all 360 elements
  Group st = set_stabilizer(a6, {0, 1});
  auto elems = oracles::closure(6, a6.generators());
  std::size_t expect = 0;
  for (const Perm& e : elems) {
    bool keeps = (e[0] == 0 || e[0] == 1) && (e[1] == 0 || e[1] == 1);
    if (keeps) ++expect;
  }
  CHECK(st.order() == expect);
  for (const Perm& g : st.generators()) {
    CHECK((g[0] == 0 || g[0] == 1));
    CHECK((g[1] == 0 || g[1] == 1));
  }
  // singleton reduces to the point stabilizer
  CHECK(set_stabilizer(a6, {3}).same_group_as(a6.point_stabilizer(3)));
}

TEST_CASE("set stabilizer random oracle") {
  Rng rng(4242);
  Group s6 = oracles::s6_natural();
  auto elems = oracles::closure(6, s6.generators());
  for (int t = 0; t < 6; ++t) {
    std::vector<Point> set;
    std::vector<bool> in(6, false);
    std::size_t k = 1 + rng.below(4);
    while (set.size() < k) {
      Point p = static_cast<Point>(rng.below(6));
      if (!in[p]) {
        in[p] = true;
        set.push_back(p);
      }
    }
    Group st = set_stabilizer(s6, set);
    std::size_t expect = 0;
    for (const Perm& e : elems) {
      bool ok = true;
      for (Point p = 0; p < 6 && ok; ++p)
        if (in[p] != in[e[p]]) ok = false;
      if (ok) ++expect;
    }
    CHECK(st.order() == expect);
  }
}
