#ifndef CARTDEC_CHAIN_HPP
#define CARTDEC_CHAIN_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cartdec/bigint.hpp"
#include "cartdec/perm.hpp"

namespace cartdec {

// Deterministic Schreier-Sims stabilizer chain. Base points are taken from
// an optional forced prefix, then smallest moved points, so identical input
// generators always produce an identical chain.
//
// Strong generators may carry "shadow" permutations (images under a group
// homomorphism given on the generators). Shadows are propagated through all
// words, which turns the chain into an evaluator for the homomorphism.
class Chain {
public:
  struct Level {
    Point base = 0;
    std::vector<Point> orbit;             // BFS order; orbit[0] == base
    std::vector<Point> where;             // position+1 in orbit, 0 = absent
    std::vector<std::uint32_t> via_gen;   // per point: sgs index of entering edge
    std::vector<Point> via_from;          // per point: predecessor
    std::vector<std::uint32_t> gens;      // sgs indices generating this level group
  };

  Chain() = default;

  static Chain build(Point degree, const std::vector<Perm>& gens,
                     const std::vector<Perm>& shadows = {},
                     const std::vector<Point>& base_hint = {});

  // Assembles a chain from a transitive level on `base` plus an already
  // certified chain for the stabilizer. `expected_order` must equal
  // |orbit(base)| * stab.order(); this is the correctness certificate.
  static Chain seeded(Point degree, const std::vector<Perm>& gens,
                      const std::vector<Perm>& shadows, Point base,
                      const Chain& stab, const BigInt& expected_order);

  Point degree() const { return degree_; }
  const BigInt& order() const { return order_; }
  std::size_t num_levels() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;
  bool has_shadows() const { return has_shadows_; }
  Point shadow_degree() const { return shadow_degree_; }

  bool contains(const Perm& g) const;
  // residue after sifting and the number of levels passed
  std::pair<Perm, std::size_t> sift(const Perm& g) const;

  // image of a member under the homomorphism defined by generator shadows
  Perm shadow_of(const Perm& g) const;

  Perm transversal(std::size_t lvl, Point x) const;       // maps level base -> x
  Perm transversal_inv(std::size_t lvl, Point x) const;
  Perm shadow_transversal(std::size_t lvl, Point x) const;

  // generators of the i-th level group (i = 0: the whole group)
  std::vector<Perm> level_generators(std::size_t lvl) const;
  std::vector<Perm> level_shadow_generators(std::size_t lvl) const;

  BigInt level_order(std::size_t lvl) const;

  // uniformly random element; `rand_below(n)` must return a value in [0,n)
  template <typename RandBelow>
  Perm random_element(RandBelow&& rand_below) const {
    Perm g(degree_);
    for (std::size_t lvl = levels_.size(); lvl-- > 0;) {
      const Level& L = levels_[lvl];
      Point x = L.orbit[rand_below(L.orbit.size())];
      g = g * transversal(lvl, x);  // g accumulates t_m * ... * t_1
    }
    return g;
  }

  // all elements, aborting with std::nullopt once more than `cap` exist
  std::optional<std::vector<Perm>> elements(std::uint64_t cap) const;

private:
  Point degree_ = 0;
  bool has_shadows_ = false;
  Point shadow_degree_ = 0;
  std::vector<Perm> sgs_;
  std::vector<Perm> sgs_inv_;
  std::vector<Perm> shadow_sgs_;
  std::vector<Perm> shadow_sgs_inv_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
  // cached transversal elements per level (small degrees only)
  mutable std::vector<std::vector<std::optional<Perm>>> tcache_, tcache_inv_;

  struct Builder;
  void init_caches() const;
  Perm walk(std::size_t lvl, Point x, bool inverse, bool shadow) const;
  void enumerate(std::size_t lvl, const Perm& suffix, std::vector<Perm>& out,
                 std::uint64_t cap, bool& overflow) const;
};

}  // namespace cartdec

#endif
