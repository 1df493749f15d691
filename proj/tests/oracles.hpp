#ifndef CARTDEC_TESTS_ORACLES_HPP
#define CARTDEC_TESTS_ORACLES_HPP

// Independent brute-force oracles. These deliberately avoid the stabilizer
// chain and backtrack code paths they are used to check.

#include <set>
#include <unordered_set>
#include <vector>

#include "cartdec/group.hpp"
#include "cartdec/perm.hpp"

namespace oracles {

using cartdec::Perm;
using cartdec::PermHash;
using cartdec::Point;

// all elements of <gens> by plain BFS closure under composition
inline std::vector<Perm> closure(Point degree, const std::vector<Perm>& gens,
                                 std::size_t cap = 2'000'000) {
  std::vector<Perm> elems{Perm(degree)};
  std::unordered_set<Perm, PermHash> seen{Perm(degree)};
  for (std::size_t h = 0; h < elems.size(); ++h) {
    for (const Perm& g : gens) {
      Perm e = elems[h] * g;
      if (seen.insert(e).second) {
        elems.push_back(std::move(e));
        if (elems.size() > cap) throw std::runtime_error("closure cap exceeded");
      }
    }
  }
  return elems;
}

// |{a*b : a in A, b in B}| by explicit set product
inline std::size_t product_set_size(const std::vector<Perm>& a,
                                    const std::vector<Perm>& b) {
  std::unordered_set<Perm, PermHash> prod;
  for (const Perm& x : a)
    for (const Perm& y : b) prod.insert(x * y);
  return prod.size();
}

// elements common to both closures
inline std::size_t intersection_size(const std::vector<Perm>& a,
                                     const std::vector<Perm>& b) {
  std::unordered_set<Perm, PermHash> in_a(a.begin(), a.end());
  std::size_t n = 0;
  for (const Perm& y : b) n += in_a.count(y);
  return n;
}

// common small groups
inline cartdec::Group a5_natural() {
  return cartdec::Group(5,
                        {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}),
                         Perm::from_cycles(5, {{0, 1, 2}})},
                        "A5");
}

inline cartdec::Group a6_natural() {
  return cartdec::Group(6,
                        {Perm::from_cycles(6, {{0, 1, 2}}),
                         Perm::from_cycles(6, {{1, 2, 3, 4, 5}})},
                        "A6");
}

inline cartdec::Group s6_natural() {
  return cartdec::Group(6,
                        {Perm::from_cycles(6, {{0, 1}}),
                         Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})},
                        "S6");
}

// the two A5 conjugacy classes inside natural A6: a point stabilizer and a
// transitive PSL(2,5) (projective line, 5 ~ infinity)
inline cartdec::Group a6_point_stab_a5() {
  return cartdec::Group(6,
                        {Perm::from_cycles(6, {{0, 1, 2, 3, 4}}),
                         Perm::from_cycles(6, {{0, 1, 2}})},
                        "A5-class-I");
}

inline cartdec::Group a6_exotic_a5() {
  return cartdec::Group(6,
                        {Perm::from_cycles(6, {{0, 1, 2, 3, 4}}),
                         Perm::from_cycles(6, {{0, 5}, {1, 4}})},
                        "A5-class-II");
}

}  // namespace oracles

#endif
