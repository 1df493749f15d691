#include "cartdec/chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cartdec {

namespace {
constexpr std::uint64_t kTransversalCacheCap = 40'000'000;  // points * degree
}

struct Chain::Builder {
  Chain& c;
  std::vector<Point> hint;
  std::size_t hint_used = 0;
  // per level, per gen slot: orbit positions already expanded into Schreier gens
  std::vector<std::vector<std::size_t>> done;
  std::unordered_set<Perm, PermHash> seen_schreier;

  explicit Builder(Chain& chain) : c(chain) {}

  void add_level(Point base) {
    Level L;
    L.base = base;
    L.orbit.push_back(base);
    L.where.assign(c.degree_, 0);
    L.where[base] = 1;
    L.via_gen.assign(c.degree_, 0);
    L.via_from.assign(c.degree_, 0);
    c.levels_.push_back(std::move(L));
    done.emplace_back();
  }

  void install(const Perm& g, const Perm& shadow, std::size_t lvl) {
    std::uint32_t idx = static_cast<std::uint32_t>(c.sgs_.size());
    c.sgs_.push_back(g);
    c.sgs_inv_.push_back(g.inverse());
    if (c.has_shadows_) {
      c.shadow_sgs_.push_back(shadow);
      c.shadow_sgs_inv_.push_back(shadow.inverse());
    }
    if (lvl == c.levels_.size()) {
      Point base;
      if (hint_used < hint.size()) {
        base = hint[hint_used++];
        // forced base points may be fixed by g; that still creates the level
      } else {
        base = g.smallest_moved();
      }
      add_level(base);
    }
    for (std::size_t i = 0; i <= lvl && i < c.levels_.size(); ++i) {
      c.levels_[i].gens.push_back(idx);
      done[i].push_back(0);
    }
  }

  // extend BFS orbit at level with current gens; returns true if grown
  bool extend_orbit(std::size_t lvl) {
    Level& L = c.levels_[lvl];
    bool grew = false;
    std::size_t head = 0;
    while (head < L.orbit.size()) {
      Point x = L.orbit[head++];
      for (std::uint32_t gi : L.gens) {
        Point y = c.sgs_[gi][x];
        if (!L.where[y]) {
          L.where[y] = static_cast<Point>(L.orbit.size()) + 1;
          L.via_gen[y] = gi;
          L.via_from[y] = x;
          L.orbit.push_back(y);
          grew = true;
        }
      }
    }
    return grew;
  }

  // sift g assuming it fixes bases of levels < from; pair of residue+shadow
  std::pair<Perm, std::size_t> sift_from(Perm g, Perm& shadow, std::size_t from) {
    std::size_t lvl = from;
    for (; lvl < c.levels_.size(); ++lvl) {
      const Level& L = c.levels_[lvl];
      Point x = g[L.base];
      if (x == L.base) continue;
      if (!L.where[x]) break;
      g = g * c.walk(lvl, x, /*inverse=*/true, /*shadow=*/false);
      if (c.has_shadows_)
        shadow = shadow * c.walk(lvl, x, true, true);
    }
    return {std::move(g), lvl};
  }

  void run(const std::vector<Perm>& gens, const std::vector<Perm>& shadows) {
    // pre-create levels for every forced base point
    for (std::size_t i = 0; i < hint.size(); ++i) add_level(hint[i]);
    hint_used = hint.size();

    // queue of (perm, shadow, known fixed-prefix level)
    struct Item {
      Perm g, shadow;
      std::size_t from;
    };
    std::vector<Item> queue;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_identity()) continue;
      queue.push_back({gens[i], c.has_shadows_ ? shadows[i] : Perm(), 0});
    }

    for (;;) {
      if (!queue.empty()) {
        Item it = std::move(queue.back());
        queue.pop_back();
        Perm shadow = std::move(it.shadow);
        auto [res, lvl] = sift_from(std::move(it.g), shadow, it.from);
        if (!res.is_identity()) {
          install(res, shadow, lvl);
          c.tcache_.clear();
          c.tcache_inv_.clear();
          c.init_caches();
        }
        continue;
      }
      // closure scan: all Schreier generators must sift to identity
      bool dirty = false;
      for (std::size_t lvl = 0; lvl < c.levels_.size() && !dirty; ++lvl) {
        extend_orbit(lvl);
        Level& L = c.levels_[lvl];
        for (std::size_t s = 0; s < L.gens.size() && !dirty; ++s) {
          std::uint32_t gi = L.gens[s];
          for (std::size_t pos = done[lvl][s]; pos < L.orbit.size(); ++pos) {
            done[lvl][s] = pos + 1;
            Point x = L.orbit[pos];
            Point y = c.sgs_[gi][x];
            Perm t = c.walk(lvl, x, false, false);
            Perm sg = t * c.sgs_[gi] * c.walk(lvl, y, true, false);
            if (sg.is_identity()) continue;
            if (!seen_schreier.insert(sg).second) continue;
            Perm sh;
            if (c.has_shadows_) {
              sh = c.walk(lvl, x, false, true) * c.shadow_sgs_[gi] *
                   c.walk(lvl, y, true, true);
            }
            queue.push_back({std::move(sg), std::move(sh), lvl + 1});
            dirty = true;
            break;
          }
        }
      }
      if (!dirty && queue.empty()) break;
    }

    // drop trailing trivial levels that came from an over-long hint
    while (!c.levels_.empty() && c.levels_.back().orbit.size() == 1 &&
           c.levels_.back().gens.empty())
      c.levels_.pop_back();

    c.order_ = 1;
    for (const Level& L : c.levels_) c.order_ *= L.orbit.size();
  }
};

Chain Chain::build(Point degree, const std::vector<Perm>& gens,
                   const std::vector<Perm>& shadows,
                   const std::vector<Point>& base_hint) {
  Chain c;
  c.degree_ = degree;
  c.has_shadows_ = !shadows.empty();
  if (c.has_shadows_) {
    if (shadows.size() != gens.size())
      throw std::invalid_argument("Chain: shadow/generator count mismatch");
    c.shadow_degree_ = shadows.empty() ? 0 : shadows[0].degree();
  }
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("Chain: generator degree mismatch");
  Builder b(c);
  b.hint = base_hint;
  b.run(gens, shadows);
  c.init_caches();
  return c;
}

Chain Chain::seeded(Point degree, const std::vector<Perm>& gens,
                    const std::vector<Perm>& shadows, Point base,
                    const Chain& stab, const BigInt& expected_order) {
  Chain c;
  c.degree_ = degree;
  c.has_shadows_ = !shadows.empty();
  if (c.has_shadows_) {
    if (shadows.size() != gens.size() || !stab.has_shadows_)
      throw std::invalid_argument("Chain: seeded shadow mismatch");
    c.shadow_degree_ = shadows[0].degree();
  }

  // level 0: orbit of `base` under gens
  c.sgs_ = gens;
  for (const Perm& g : gens) c.sgs_inv_.push_back(g.inverse());
  c.shadow_sgs_ = shadows;
  for (const Perm& g : shadows) c.shadow_sgs_inv_.push_back(g.inverse());

  Level L0;
  L0.base = base;
  L0.orbit.push_back(base);
  L0.where.assign(degree, 0);
  L0.where[base] = 1;
  L0.via_gen.assign(degree, 0);
  L0.via_from.assign(degree, 0);
  for (std::uint32_t i = 0; i < gens.size(); ++i) L0.gens.push_back(i);
  c.levels_.push_back(std::move(L0));
  {
    Level& L = c.levels_[0];
    std::size_t head = 0;
    while (head < L.orbit.size()) {
      Point x = L.orbit[head++];
      for (std::uint32_t gi : L.gens) {
        Point y = c.sgs_[gi][x];
        if (!L.where[y]) {
          L.where[y] = static_cast<Point>(L.orbit.size()) + 1;
          L.via_gen[y] = gi;
          L.via_from[y] = x;
          L.orbit.push_back(y);
        }
      }
    }
  }

  // splice the stabilizer's levels, remapping generator indices
  std::uint32_t offset = static_cast<std::uint32_t>(c.sgs_.size());
  for (std::size_t i = 0; i < stab.sgs_.size(); ++i) {
    if (stab.sgs_[i][base] != base)
      throw std::invalid_argument("Chain: seeded stabilizer moves the base point");
    c.sgs_.push_back(stab.sgs_[i]);
    c.sgs_inv_.push_back(stab.sgs_inv_[i]);
    if (c.has_shadows_) {
      c.shadow_sgs_.push_back(stab.shadow_sgs_[i]);
      c.shadow_sgs_inv_.push_back(stab.shadow_sgs_inv_[i]);
    }
  }
  for (const Level& SL : stab.levels_) {
    Level L = SL;
    for (auto& gi : L.gens) gi += offset;
    for (Point p = 0; p < degree; ++p)
      if (L.where[p]) L.via_gen[p] += offset;
    c.levels_.push_back(std::move(L));
  }

  c.order_ = BigInt(c.levels_[0].orbit.size()) * stab.order();
  if (c.order_ != expected_order)
    throw std::runtime_error(
        "Chain: seeded order certificate failed (orbit * stabilizer != expected)");
  c.init_caches();
  return c;
}

void Chain::init_caches() const {
  tcache_.assign(levels_.size(), {});
  tcache_inv_.assign(levels_.size(), {});
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    std::uint64_t cost =
        static_cast<std::uint64_t>(levels_[i].orbit.size()) * degree_;
    if (cost <= kTransversalCacheCap) {
      tcache_[i].assign(levels_[i].orbit.size(), std::nullopt);
      tcache_inv_[i].assign(levels_[i].orbit.size(), std::nullopt);
    }
  }
}

Perm Chain::walk(std::size_t lvl, Point x, bool inverse, bool shadow) const {
  const Level& L = levels_[lvl];
  std::size_t pos = L.where[x] - 1;
  bool cacheable = !shadow && lvl < tcache_.size() &&
                   pos < tcache_[lvl].size();  // orbit may outgrow the cache
  if (cacheable) {
    auto& slot = (inverse ? tcache_inv_ : tcache_)[lvl][pos];
    if (slot) return *slot;
  }
  // collect the generator word along the Schreier tree path base -> x
  std::vector<std::uint32_t> word;
  for (Point p = x; p != L.base; p = L.via_from[p]) word.push_back(L.via_gen[p]);
  std::reverse(word.begin(), word.end());
  const std::vector<Perm>& fw = shadow ? shadow_sgs_ : sgs_;
  const std::vector<Perm>& bw = shadow ? shadow_sgs_inv_ : sgs_inv_;
  Perm r(shadow ? shadow_degree_ : degree_);
  if (!inverse) {
    for (std::uint32_t gi : word) r = r * fw[gi];
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = r * bw[*it];
  }
  if (cacheable) (inverse ? tcache_inv_ : tcache_)[lvl][pos] = r;
  return r;
}

Perm Chain::transversal(std::size_t lvl, Point x) const {
  if (!levels_[lvl].where[x])
    throw std::invalid_argument("Chain: point not in level orbit");
  return walk(lvl, x, false, false);
}

Perm Chain::transversal_inv(std::size_t lvl, Point x) const {
  if (!levels_[lvl].where[x])
    throw std::invalid_argument("Chain: point not in level orbit");
  return walk(lvl, x, true, false);
}

Perm Chain::shadow_transversal(std::size_t lvl, Point x) const {
  if (!levels_[lvl].where[x])
    throw std::invalid_argument("Chain: point not in level orbit");
  return walk(lvl, x, false, true);
}

std::pair<Perm, std::size_t> Chain::sift(const Perm& g) const {
  Perm r = g;
  std::size_t lvl = 0;
  for (; lvl < levels_.size(); ++lvl) {
    const Level& L = levels_[lvl];
    Point x = r[L.base];
    if (x == L.base) continue;
    if (!L.where[x]) break;
    r = r * walk(lvl, x, true, false);
  }
  return {std::move(r), lvl};
}

bool Chain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).first.is_identity();
}

Perm Chain::shadow_of(const Perm& g) const {
  if (!has_shadows_) throw std::logic_error("Chain: no shadows attached");
  Perm r = g;
  Perm acc(shadow_degree_);  // product of shadow transversals, in sift order
  for (std::size_t lvl = 0; lvl < levels_.size(); ++lvl) {
    const Level& L = levels_[lvl];
    Point x = r[L.base];
    if (x == L.base) continue;
    if (!L.where[x])
      throw std::invalid_argument("Chain: shadow_of on non-member");
    r = r * walk(lvl, x, true, false);
    acc = walk(lvl, x, false, true) * acc;  // g = residue * t_m * ... * t_1
  }
  if (!r.is_identity())
    throw std::invalid_argument("Chain: shadow_of on non-member");
  return acc;
}

std::vector<Point> Chain::base() const {
  std::vector<Point> b;
  for (const Level& L : levels_) b.push_back(L.base);
  return b;
}

std::vector<Perm> Chain::level_generators(std::size_t lvl) const {
  std::vector<Perm> out;
  if (lvl >= levels_.size()) return out;
  for (std::uint32_t gi : levels_[lvl].gens) out.push_back(sgs_[gi]);
  return out;
}

std::vector<Perm> Chain::level_shadow_generators(std::size_t lvl) const {
  std::vector<Perm> out;
  if (lvl >= levels_.size()) return out;
  for (std::uint32_t gi : levels_[lvl].gens) out.push_back(shadow_sgs_[gi]);
  return out;
}

BigInt Chain::level_order(std::size_t lvl) const {
  BigInt o = 1;
  for (std::size_t i = lvl; i < levels_.size(); ++i) o *= levels_[i].orbit.size();
  return o;
}

void Chain::enumerate(std::size_t lvl, const Perm& suffix, std::vector<Perm>& out,
                      std::uint64_t cap, bool& overflow) const {
  if (overflow) return;
  if (lvl == levels_.size()) {
    if (out.size() >= cap) {
      overflow = true;
      return;
    }
    out.push_back(suffix);
    return;
  }
  // elements factor as t_m * ... * t_1; recurse deepest level outermost
  const Level& L = levels_[lvl];
  for (Point x : L.orbit) {
    enumerate(lvl + 1, walk(lvl, x, false, false) * suffix, out, cap, overflow);
    if (overflow) return;
  }
}

std::optional<std::vector<Perm>> Chain::elements(std::uint64_t cap) const {
  if (order_ > cap) return std::nullopt;
  std::vector<Perm> out;
  bool overflow = false;
  enumerate(0, Perm(degree_), out, cap, overflow);
  if (overflow) return std::nullopt;
  return out;
}

}  // namespace cartdec
