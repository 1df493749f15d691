#include "cartdec/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cartdec {

Group::Group(Point degree, std::vector<Perm> gens, std::string name)
    : degree_(degree), gens_(std::move(gens)), name_(std::move(name)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("Group: generator degree mismatch");
}

Group::Group(Point degree, std::vector<Perm> gens, std::vector<Perm> shadows,
             std::string name)
    : Group(degree, std::move(gens), std::move(name)) {
  shadows_ = std::move(shadows);
  if (shadows_.size() != gens_.size())
    throw std::invalid_argument("Group: shadow count mismatch");
}

const Chain& Group::chain() const {
  if (!chain_)
    chain_ = std::make_shared<const Chain>(Chain::build(degree_, gens_, shadows_));
  return *chain_;
}

Chain Group::chain_with_base(const std::vector<Point>& prefix) const {
  return Chain::build(degree_, gens_, shadows_, prefix);
}

bool Group::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return chain().contains(g);
}

std::vector<Point> orbit_of(Point x, const std::vector<Perm>& gens, Point degree) {
  std::vector<Point> orb{x};
  std::vector<bool> in(degree, false);
  in[x] = true;
  for (std::size_t h = 0; h < orb.size(); ++h)
    for (const Perm& g : gens) {
      Point y = g[orb[h]];
      if (!in[y]) {
        in[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<Point> Group::orbit(Point x) const {
  if (x >= degree_) throw std::invalid_argument("Group: orbit point out of range");
  return orbit_of(x, gens_, degree_);
}

std::vector<std::vector<Point>> Group::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit(x);
    for (Point y : orb) seen[y] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool Group::is_transitive() const {
  return degree_ == 0 || orbit(0).size() == degree_;
}

bool Group::fixes(Point x) const {
  for (const Perm& g : gens_)
    if (g[x] != x) return false;
  return true;
}

Group Group::point_stabilizer(Point x) const {
  if (x >= degree_) throw std::invalid_argument("Group: stabilizer point out of range");
  Chain c = chain_with_base({x});
  std::vector<Perm> sg, ssh;
  if (c.num_levels() == 0 || c.level(0).base != x) {
    // x not moved at all: stabilizer is the whole group
    return *this;
  }
  sg = c.level_generators(1);
  if (has_shadows()) ssh = c.level_shadow_generators(1);
  Group st = shadows_.empty() ? Group(degree_, std::move(sg))
                              : Group(degree_, std::move(sg), std::move(ssh), "");
  return st;
}

std::optional<std::vector<Perm>> Group::elements(std::uint64_t cap) const {
  return chain().elements(cap);
}

Perm Group::random_element(Rng& rng) const {
  return chain().random_element([&rng](std::size_t n) { return rng.below(n); });
}

Group Group::conjugated_by(const Perm& c) const {
  std::vector<Perm> gg;
  gg.reserve(gens_.size());
  for (const Perm& g : gens_) gg.push_back(conjugate(g, c));
  return Group(degree_, std::move(gg), name_);
}

bool Group::is_subgroup_of(const Group& big) const {
  for (const Perm& g : gens_)
    if (!big.contains(g)) return false;
  return true;
}

bool Group::same_group_as(const Group& other) const {
  if (degree_ != other.degree_) return false;
  if (order() != other.order()) return false;
  return is_subgroup_of(other);
}

bool is_normal(const Group& g, const Group& n) {
  if (!n.is_subgroup_of(g)) throw std::invalid_argument("is_normal: not a subgroup");
  for (const Perm& x : g.generators())
    for (const Perm& h : n.generators())
      if (!n.contains(conjugate(h, x))) return false;
  return true;
}

Group normal_closure(const Group& g, const std::vector<Perm>& seed) {
  std::vector<Perm> gens = seed;
  Group h(g.degree(), gens);
  for (;;) {
    bool grew = false;
    for (const Perm& x : g.generators()) {
      for (const Perm& s : gens) {
        Perm c = conjugate(s, x);
        if (!h.contains(c)) {
          gens.push_back(c);
          h = Group(g.degree(), gens);
          grew = true;
        }
      }
    }
    if (!grew) return h;
  }
}

// defined in backtrack.cpp
Group intersect(const Group& a, const Group& b);

Group core(const Group& m, const Group& k) {
  if (!k.is_subgroup_of(m)) throw std::invalid_argument("core: K not inside M");
  Group c = k;
  for (;;) {
    bool changed = false;
    for (const Perm& x : m.generators()) {
      Group cx = c.conjugated_by(x);
      if (!cx.same_group_as(c)) {
        c = intersect(c, cx);
        changed = true;
      }
    }
    if (!changed) return c;
  }
}

std::optional<std::vector<Perm>> conjugacy_class_reps(const Group& g,
                                                      std::uint64_t cap) {
  auto elems = g.elements(cap);
  if (!elems) return std::nullopt;
  std::unordered_set<Perm, PermHash> left(elems->begin(), elems->end());
  std::vector<Perm> reps;
  while (!left.empty()) {
    // deterministic pick: smallest remaining
    Perm rep = *std::min_element(left.begin(), left.end());
    reps.push_back(rep);
    // close the class
    std::vector<Perm> cls{rep};
    std::unordered_set<Perm, PermHash> in_cls{rep};
    for (std::size_t h = 0; h < cls.size(); ++h)
      for (const Perm& x : g.generators()) {
        Perm c = conjugate(cls[h], x);
        if (in_cls.insert(c).second) cls.push_back(c);
      }
    for (const Perm& c : cls) left.erase(c);
  }
  return reps;
}

std::optional<bool> is_simple(const Group& g, std::uint64_t cap) {
  if (g.order() == 1) return false;
  auto reps = conjugacy_class_reps(g, cap);
  if (!reps) return std::nullopt;
  for (const Perm& r : *reps) {
    if (r.is_identity()) continue;
    Group cl = normal_closure(g, {r});
    if (cl.order() != g.order()) return false;
  }
  return true;
}

}  // namespace cartdec
