#ifndef CARTDEC_GROUP_HPP
#define CARTDEC_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cartdec/bigint.hpp"
#include "cartdec/chain.hpp"
#include "cartdec/perm.hpp"
#include "cartdec/rng.hpp"

namespace cartdec {

// A permutation group given by generators, with a lazily built deterministic
// stabilizer chain. Immutable once the chain exists; copying shares the chain.
class Group {
public:
  Group() : degree_(1) {}
  explicit Group(Point degree) : degree_(degree) {}  // trivial group
  Group(Point degree, std::vector<Perm> gens, std::string name = "");
  // generators with attached homomorphism images
  Group(Point degree, std::vector<Perm> gens, std::vector<Perm> shadows,
        std::string name);

  Point degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& shadow_generators() const { return shadows_; }
  bool has_shadows() const { return !shadows_.empty(); }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const Chain& chain() const;                         // natural base
  Chain chain_with_base(const std::vector<Point>& prefix) const;

  const BigInt& order() const { return chain().order(); }
  bool is_trivial() const { return order() == 1; }
  bool contains(const Perm& g) const;
  Perm shadow_of(const Perm& g) const { return chain().shadow_of(g); }

  std::vector<Point> orbit(Point x) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;
  bool fixes(Point x) const;

  Group point_stabilizer(Point x) const;
  std::optional<std::vector<Perm>> elements(std::uint64_t cap) const;
  Perm random_element(Rng& rng) const;

  Group conjugated_by(const Perm& c) const;  // {c^-1 g c}

  bool is_subgroup_of(const Group& big) const;
  bool same_group_as(const Group& other) const;  // order + mutual membership

private:
  Point degree_ = 1;
  std::vector<Perm> gens_;
  std::vector<Perm> shadows_;
  std::string name_;
  mutable std::shared_ptr<const Chain> chain_;
};

// orbit of x under a raw generator list
std::vector<Point> orbit_of(Point x, const std::vector<Perm>& gens, Point degree);

bool is_normal(const Group& g, const Group& n);  // n normalized by g's gens
Group normal_closure(const Group& g, const std::vector<Perm>& seed);
Group core(const Group& m, const Group& k);      // largest normal subgroup of m inside k

// one representative per conjugacy class (requires order <= cap)
std::optional<std::vector<Perm>> conjugacy_class_reps(const Group& g, std::uint64_t cap);

// no proper nontrivial normal subgroup; certified via class-representative
// normal closures. nullopt = order above cap, not decided.
std::optional<bool> is_simple(const Group& g, std::uint64_t cap);

}  // namespace cartdec

#endif
