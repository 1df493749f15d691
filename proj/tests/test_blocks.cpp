#include "doctest.h"

#include "cartdec/blocks.hpp"
#include "oracles.hpp"

using namespace cartdec;

namespace {
Group c4_regular() {
  return Group(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})}, "C4");
}
}  // namespace

TEST_CASE("seed block system on regular C4") {
  Group g = c4_regular();
  Partition p = block_system_from_seed(g, 0, 2);
  CHECK(p.block_count() == 2);
  CHECK(p.block_of(0) == p.block_of(2));
  CHECK(p.block_of(1) == p.block_of(3));
  CHECK(p.block_of(0) != p.block_of(1));
  CHECK(p.invariant_under(g));
}

TEST_CASE("seed (x,x) gives singletons") {
  Group g = c4_regular();
  CHECK(block_system_from_seed(g, 1, 1) == Partition::singletons(4));
}

TEST_CASE("primitive A5: any seed collapses to one block") {
  Group a5 = oracles::a5_natural();
  for (Point y = 1; y < 5; ++y)
    CHECK(block_system_from_seed(a5, 0, y).block_count() == 1);
}

TEST_CASE("intransitive input is an error") {
  Group g(4, {Perm::from_cycles(4, {{0, 1}})});
  CHECK_THROWS_AS(block_system_from_seed(g, 0, 1), std::invalid_argument);
}

TEST_CASE("all block systems of C4") {
  auto bs = all_block_systems(c4_regular(), 1000);
  CHECK_FALSE(bs.truncated);
  REQUIRE(bs.systems.size() == 3);  // singletons, {0,2}/{1,3}, one block
  std::vector<std::uint32_t> counts;
  for (auto& p : bs.systems) counts.push_back(p.block_count());
  std::sort(counts.begin(), counts.end());
  CHECK(counts == std::vector<std::uint32_t>{1, 2, 4});
}

TEST_CASE("primitive group: only trivial systems") {
  auto bs = all_block_systems(oracles::a5_natural(), 1000);
  CHECK(bs.systems.size() == 2);
}

TEST_CASE("budget zero truncates") {
  auto bs = all_block_systems(c4_regular(), 0);
  CHECK(bs.truncated);
  CHECK(bs.systems.empty());
}

TEST_CASE("block invariance property") {
  // every produced system is G-invariant: apply every generator to every block
  Group s4(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
  auto bs = all_block_systems(s4, 1000);
  for (auto& p : bs.systems)
    for (const Perm& g : s4.generators()) CHECK(p.apply(g) == p);
}

TEST_CASE("block stabilizer via Schreier generators") {
  Group g = c4_regular();
  Partition p = block_system_from_seed(g, 0, 2);
  Group st = block_stabilizer(g, p, 0);
  CHECK(st.order() == 2);  // <(0 2)(1 3)>
  CHECK(st.contains(Perm::from_cycles(4, {{0, 2}, {1, 3}})));

  // oracle on S4 with blocks {0,1},{2,3}: elements preserving {0,1}
  Group s4(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
  Partition q = Partition::from_blocks(4, {{0, 1}, {2, 3}});
  REQUIRE(q.invariant_under(s4));
  Group stq = block_stabilizer(s4, q, 0);
  auto elems = oracles::closure(4, s4.generators());
  std::size_t expect = 0;
  for (const Perm& e : elems)
    if ((e[0] == 0 || e[0] == 1) && (e[1] == 0 || e[1] == 1)) ++expect;
  CHECK(stq.order() == expect);
}

TEST_CASE("partition joins") {
  Partition a = Partition::from_blocks(6, {{0, 1}, {2, 3}, {4, 5}});
  Partition b = Partition::from_blocks(6, {{1, 2}, {3, 4}, {5, 0}});
  CHECK(a.join(b) == Partition::one_block(6));
  CHECK(a.join(a) == a);
  CHECK(a.join(Partition::singletons(6)) == a);
}
