#include "doctest.h"

#include <stdexcept>

#include "cartdec/perm.hpp"
#include "cartdec/rng.hpp"

using namespace cartdec;

TEST_CASE("identity composition laws") {
  Perm id(4);
  CHECK(id * id == id);
  CHECK(id.is_identity());
  CHECK(id.even());
}

TEST_CASE("inverse law") {
  Perm p = Perm::from_cycles(7, {{0, 3, 5}, {1, 2}});
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
}

TEST_CASE("right action: (0 1 2) * (0 1) = (1 2)") {
  // hand multiplication under right action, confirmed against the full
  // 3-point composition table
  Perm p = Perm::from_cycles(3, {{0, 1, 2}});
  Perm q = Perm::from_cycles(3, {{0, 1}});
  Perm expect = Perm::from_cycles(3, {{1, 2}});
  CHECK(p * q == expect);
  // x^(p*q) == (x^p)^q pointwise, for every pair of S3 elements
  std::vector<Perm> s3;
  std::vector<Point> idx{0, 1, 2};
  do {
    s3.push_back(Perm(std::vector<Point>(idx.begin(), idx.end())));
  } while (std::next_permutation(idx.begin(), idx.end()));
  for (const Perm& a : s3)
    for (const Perm& b : s3) {
      Perm ab = a * b;
      for (Point x = 0; x < 3; ++x) CHECK(ab[x] == b[a[x]]);
    }
}

TEST_CASE("degree mismatch is an error") {
  CHECK_THROWS_AS(Perm(3) * Perm(4), std::invalid_argument);
}

TEST_CASE("bijection validation") {
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 3, 1}), std::invalid_argument);
}

TEST_CASE("parity") {
  CHECK_FALSE(Perm::from_cycles(5, {{0, 1}}).even());
  CHECK(Perm::from_cycles(5, {{0, 1, 2}}).even());
  CHECK(Perm::from_cycles(5, {{0, 1}, {2, 3}}).even());
  CHECK_FALSE(Perm::from_cycles(6, {{0, 1, 2, 3}}).even());
}

TEST_CASE("random inverse/associativity properties") {
  Rng rng(12345);
  for (int t = 0; t < 50; ++t) {
    Point n = 3 + static_cast<Point>(rng.below(20));
    std::vector<Point> img(n);
    for (Point i = 0; i < n; ++i) img[i] = i;
    for (Point i = n; i-- > 1;) std::swap(img[i], img[rng.below(i + 1)]);
    Perm a{img};
    for (Point i = n; i-- > 1;) std::swap(img[i], img[rng.below(i + 1)]);
    Perm b{img};
    for (Point i = n; i-- > 1;) std::swap(img[i], img[rng.below(i + 1)]);
    Perm c{img};
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK(conjugate(a, b)[b[0]] == b[a[0]]);
  }
}

TEST_CASE("restriction") {
  Perm p = Perm::from_cycles(6, {{0, 1}, {3, 4, 5}});
  Perm r = p.restricted_to(3, 6);
  CHECK(r == Perm::from_cycles(6, {{3, 4, 5}}));
  CHECK(p.maps_range_into(0, 3));
  Perm q = Perm::from_cycles(6, {{2, 3}});
  CHECK_FALSE(q.maps_range_into(0, 3));
  CHECK_THROWS_AS(q.restricted_to(0, 3), std::invalid_argument);
}
