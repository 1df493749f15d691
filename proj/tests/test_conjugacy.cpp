#include "doctest.h"

#include "cartdec/conjugacy.hpp"
#include "oracles.hpp"

using namespace cartdec;

TEST_CASE("A = B returns the identity witness") {
  Group a5 = oracles::a5_natural();
  Group st = a5.point_stabilizer(0);
  auto r = conjugate_subgroup_search(a5, st, st);
  REQUIRE(r.status == ConjugacyResult::Status::Found);
  CHECK(r.witness->is_identity());
}

TEST_CASE("two point stabilizers in a transitive group are conjugate") {
  Group a6 = oracles::a6_natural();
  Group s0 = a6.point_stabilizer(0);
  Group s3 = a6.point_stabilizer(3);
  auto r = conjugate_subgroup_search(a6, s0, s3);
  REQUIRE(r.status == ConjugacyResult::Status::Found);
  CHECK(s0.conjugated_by(*r.witness).same_group_as(s3));
}

TEST_CASE("the two A5 classes in A6 are not conjugate") {
  Group a6 = oracles::a6_natural();
  auto r = conjugate_subgroup_search(a6, oracles::a6_point_stab_a5(),
                                     oracles::a6_exotic_a5());
  CHECK(r.status == ConjugacyResult::Status::NotConjugate);
  // the orbit closed: 6 point stabilizers
  CHECK(r.orbit_size == 6);
}

TEST_CASE("budget truncation is flagged") {
  Group a6 = oracles::a6_natural();
  auto r = conjugate_subgroup_search(a6, oracles::a6_point_stab_a5(),
                                     oracles::a6_exotic_a5(), /*orbit_budget=*/2);
  CHECK(r.status == ConjugacyResult::Status::Truncated);
}

TEST_CASE("generator-driven search matches group-driven search") {
  Group s6 = oracles::s6_natural();
  Group a = oracles::a6_point_stab_a5();
  Group b = oracles::a6_exotic_a5();
  // under S6-conjugation the two classes stay separate as well
  auto r = conjugate_subgroup_search_gens(s6.generators(), a, b);
  CHECK(r.status == ConjugacyResult::Status::NotConjugate);
  // S6-conjugates of a point stabilizer are the 6 point stabilizers
  CHECK(r.orbit_size == 6);
}
