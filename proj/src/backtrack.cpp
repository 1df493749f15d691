#include "cartdec/backtrack.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace cartdec {

namespace {

// Steps through a chain along a prescribed base sequence. Base points the
// chain does not use are necessarily fixed by the current level group.
struct Walker {
  const Chain* ch;
  std::size_t li = 0;

  bool active(Point base_point) const {
    return li < ch->num_levels() && ch->level(li).base == base_point;
  }
};

struct Search {
  Point degree;
  std::vector<Point> common;
  const Chain* ca = nullptr;
  const Chain* cb = nullptr;        // null for set stabilizer
  const std::vector<bool>* in_set = nullptr;
  std::vector<Perm> found;
  std::unique_ptr<Chain> found_chain;  // rebuilt when found grows

  explicit Search(Point deg) : degree(deg) {}

  void add_found(const Perm& g) {
    found.push_back(g);
    found_chain = std::make_unique<Chain>(Chain::build(degree, found));
  }

  bool already_have(const Perm& g) const {
    return found_chain && found_chain->contains(g);
  }

  // orbit minima of <found gens fixing the prefix>: a sound refinement of
  // the minimal-in-stabilizer-orbit pruning rule
  std::vector<Point> orbit_min(std::size_t depth) const {
    std::vector<Point> root(degree);
    for (Point i = 0; i < degree; ++i) root[i] = i;
    auto find = [&root](Point x) {
      while (root[x] != x) {
        root[x] = root[root[x]];
        x = root[x];
      }
      return x;
    };
    for (const Perm& g : found) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < depth && fixes_prefix; ++j)
        fixes_prefix = (g[common[j]] == common[j]);
      if (!fixes_prefix) continue;
      for (Point x = 0; x < degree; ++x) {
        Point a = find(x), b = find(g[x]);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<Point> mins(degree);
    for (Point x = 0; x < degree; ++x) mins[x] = find(x);
    return mins;
  }

  void dfs(std::size_t depth, Walker wa, Walker wb, const Perm& pa, const Perm& pb,
           bool identity_prefix) {
    if (depth == common.size()) {
      if (pa.is_identity()) return;
      if (cb && pa != pb) return;  // agreed on the base, must agree everywhere
      if (in_set) {
        for (Point x = 0; x < degree; ++x)
          if ((*in_set)[x] != (*in_set)[pa[x]]) return;
      }
      if (!already_have(pa)) add_found(pa);
      return;
    }
    Point c = common[depth];

    bool a_active = wa.active(c);
    Perm pa_inv = a_active ? pa.inverse() : Perm();
    std::vector<Point> cand;
    if (a_active) {
      const Chain::Level& L = ca->level(wa.li);
      cand.reserve(L.orbit.size());
      for (Point v : L.orbit) cand.push_back(pa[v]);
      std::sort(cand.begin(), cand.end());
    } else {
      cand.push_back(pa[c]);
    }

    bool b_active = cb && wb.active(c);
    Perm pb_inv = b_active ? pb.inverse() : Perm();
    std::vector<bool> allowed;
    if (cb) {
      allowed.assign(degree, false);
      if (b_active) {
        for (Point w : cb->level(wb.li).orbit) allowed[pb[w]] = true;
      } else {
        allowed[pb[c]] = true;
      }
    } else if (in_set) {
      allowed.assign(degree, false);
      bool want = (*in_set)[c];
      for (Point x = 0; x < degree; ++x) allowed[x] = ((*in_set)[x] == want);
    }

    std::vector<Point> mins;
    if (identity_prefix) mins = orbit_min(depth);

    for (Point x : cand) {
      if (!allowed.empty() && !allowed[x]) continue;
      if (identity_prefix && x != c && mins[x] != x) continue;

      Walker wa2 = wa;
      Perm pa2 = pa;
      if (a_active) {
        Point v = pa_inv[x];
        pa2 = ca->transversal(wa.li, v) * pa;
        wa2.li = wa.li + 1;
      }
      Walker wb2 = wb;
      Perm pb2 = pb;
      if (b_active) {
        Point w = pb_inv[x];
        pb2 = cb->transversal(wb.li, w) * pb;
        wb2.li = wb.li + 1;
      }
      dfs(depth + 1, wa2, wb2, pa2, pb2, identity_prefix && x == c);
    }
  }
};

}  // namespace

Group intersect(const Group& a, const Group& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("intersect: degree mismatch");
  if (a.order() == 1 || b.order() == 1) return Group(a.degree());
  if (a.is_subgroup_of(b)) return a;
  if (b.is_subgroup_of(a)) return b;

  const Chain& ca = a.chain();
  std::vector<Point> baseA = ca.base();
  Chain cb = b.chain_with_base(baseA);
  std::vector<Point> common = baseA;
  for (Point p : cb.base())
    if (std::find(common.begin(), common.end(), p) == common.end())
      common.push_back(p);

  Search s(a.degree());
  s.common = std::move(common);
  s.ca = &ca;
  s.cb = &cb;
  s.dfs(0, Walker{&ca}, Walker{&cb}, Perm(a.degree()), Perm(a.degree()), true);
  return Group(a.degree(), std::move(s.found));
}

Group set_stabilizer(const Group& g, const std::vector<Point>& pts) {
  std::vector<bool> in_set(g.degree(), false);
  for (Point p : pts) {
    if (p >= g.degree())
      throw std::invalid_argument("set_stabilizer: point out of range");
    in_set[p] = true;
  }
  std::size_t k = 0;
  for (bool b : in_set) k += b;
  if (k == 0 || k == g.degree()) return g;

  std::vector<Point> hint;
  for (Point p = 0; p < g.degree(); ++p)
    if (in_set[p]) hint.push_back(p);
  Chain ch = g.chain_with_base(hint);

  Search s(g.degree());
  s.common = ch.base();
  s.ca = &ch;
  s.in_set = &in_set;
  s.dfs(0, Walker{&ch}, Walker{&ch}, Perm(g.degree()), Perm(g.degree()), true);
  return Group(g.degree(), std::move(s.found));
}

BigInt product_size(const Group& a, const Group& b) {
  return a.order() * b.order() / intersect(a, b).order();
}

}  // namespace cartdec
