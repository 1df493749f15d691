#include "cartdec/blocks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace cartdec {

void Partition::normalize() {
  std::vector<std::uint32_t> remap(block_count_, UINT32_MAX);
  std::uint32_t next = 0;
  for (auto& b : block_of_) {
    if (remap[b] == UINT32_MAX) remap[b] = next++;
    b = remap[b];
  }
  block_count_ = next;
}

Partition::Partition(std::vector<std::uint32_t> block_of, std::uint32_t block_count)
    : block_of_(std::move(block_of)), block_count_(block_count) {
  std::vector<bool> seen(block_count_, false);
  for (auto b : block_of_) {
    if (b >= block_count_) throw std::invalid_argument("Partition: block id out of range");
    seen[b] = true;
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("Partition: empty block");
  normalize();
}

Partition Partition::singletons(Point n) {
  std::vector<std::uint32_t> b(n);
  for (Point i = 0; i < n; ++i) b[i] = i;
  return Partition(std::move(b), n);
}

Partition Partition::one_block(Point n) {
  return Partition(std::vector<std::uint32_t>(n, 0), 1);
}

Partition Partition::from_blocks(Point n, const std::vector<std::vector<Point>>& blocks) {
  std::vector<std::uint32_t> b(n, UINT32_MAX);
  for (std::uint32_t i = 0; i < blocks.size(); ++i)
    for (Point p : blocks[i]) {
      if (p >= n || b[p] != UINT32_MAX)
        throw std::invalid_argument("Partition: blocks do not partition the set");
      b[p] = i;
    }
  for (auto x : b)
    if (x == UINT32_MAX) throw std::invalid_argument("Partition: uncovered point");
  return Partition(std::move(b), static_cast<std::uint32_t>(blocks.size()));
}

std::vector<std::vector<Point>> Partition::blocks() const {
  std::vector<std::vector<Point>> out(block_count_);
  for (Point i = 0; i < size(); ++i) out[block_of_[i]].push_back(i);
  return out;
}

Partition Partition::apply(const Perm& g) const {
  if (g.degree() != size()) throw std::invalid_argument("Partition: degree mismatch");
  std::vector<std::uint32_t> b(size());
  for (Point i = 0; i < size(); ++i) b[g[i]] = block_of_[i];
  return Partition(std::move(b), block_count_);
}

Partition Partition::join(const Partition& other) const {
  if (other.size() != size()) throw std::invalid_argument("Partition: size mismatch");
  // union-find over block pairs
  std::vector<std::uint32_t> root(size());
  for (Point i = 0; i < size(); ++i) root[i] = i;
  auto find = [&root](std::uint32_t x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };
  std::vector<Point> first_a(block_count_, UINT32_MAX), first_b(other.block_count_, UINT32_MAX);
  for (Point i = 0; i < size(); ++i) {
    auto merge = [&](Point j) {
      std::uint32_t a = find(i), b = find(j);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    };
    if (first_a[block_of_[i]] == UINT32_MAX)
      first_a[block_of_[i]] = i;
    else
      merge(first_a[block_of_[i]]);
    if (first_b[other.block_of_[i]] == UINT32_MAX)
      first_b[other.block_of_[i]] = i;
    else
      merge(first_b[other.block_of_[i]]);
  }
  std::vector<std::uint32_t> b(size());
  std::map<std::uint32_t, std::uint32_t> ids;
  for (Point i = 0; i < size(); ++i) {
    std::uint32_t r = find(i);
    auto it = ids.emplace(r, static_cast<std::uint32_t>(ids.size())).first;
    b[i] = it->second;
  }
  return Partition(std::move(b), static_cast<std::uint32_t>(ids.size()));
}

bool Partition::invariant_under(const Perm& g) const {
  return apply(g) == *this;
}

bool Partition::invariant_under(const Group& g) const {
  for (const Perm& x : g.generators())
    if (!invariant_under(x)) return false;
  return true;
}

Partition block_system_from_seed(const Group& g, Point x, Point y) {
  if (!g.is_transitive())
    throw std::invalid_argument("block_system_from_seed: group not transitive");
  Point n = g.degree();
  std::vector<Point> root(n);
  for (Point i = 0; i < n; ++i) root[i] = i;
  auto find = [&root](Point p) {
    while (root[p] != p) {
      root[p] = root[root[p]];
      p = root[p];
    }
    return p;
  };
  std::vector<std::pair<Point, Point>> queue;
  auto merge = [&](Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    root[std::max(a, b)] = std::min(a, b);
    queue.emplace_back(a, b);
  };
  merge(x, y);
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    for (const Perm& p : g.generators()) merge(p[a], p[b]);
  }
  std::vector<std::uint32_t> blk(n);
  std::map<Point, std::uint32_t> ids;
  for (Point i = 0; i < n; ++i) {
    auto it = ids.emplace(find(i), static_cast<std::uint32_t>(ids.size())).first;
    blk[i] = it->second;
  }
  return Partition(std::move(blk), static_cast<std::uint32_t>(ids.size()));
}

BlockSystems all_block_systems(const Group& g, std::uint64_t budget) {
  if (!g.is_transitive())
    throw std::invalid_argument("all_block_systems: group not transitive");
  BlockSystems out;
  if (budget == 0) {
    out.truncated = true;
    return out;
  }
  Point n = g.degree();
  std::set<Partition> found;
  found.insert(Partition::singletons(n));
  if (n > 1) found.insert(Partition::one_block(n));
  for (Point y = 1; y < n && !out.truncated; ++y) {
    Partition p = block_system_from_seed(g, 0, y);
    if (found.insert(p).second && found.size() > budget) out.truncated = true;
  }
  // join closure
  bool grew = true;
  while (grew && !out.truncated) {
    grew = false;
    std::vector<Partition> cur(found.begin(), found.end());
    for (std::size_t i = 0; i < cur.size() && !out.truncated; ++i)
      for (std::size_t j = i + 1; j < cur.size() && !out.truncated; ++j) {
        Partition jn = cur[i].join(cur[j]);
        if (found.insert(jn).second) {
          grew = true;
          if (found.size() > budget) out.truncated = true;
        }
      }
  }
  out.systems.assign(found.begin(), found.end());
  return out;
}

Perm action_on_blocks(const Partition& p, const Perm& g) {
  std::vector<Point> img(p.block_count(), UINT32_MAX);
  for (Point i = 0; i < p.size(); ++i) {
    std::uint32_t from = p.block_of(i), to = p.block_of(g[i]);
    if (img[from] == UINT32_MAX)
      img[from] = to;
    else if (img[from] != to)
      throw std::invalid_argument("action_on_blocks: partition not invariant");
  }
  return Perm(std::vector<Point>(img.begin(), img.end()));
}

Group block_stabilizer(const Group& g, const Partition& p, Point x) {
  std::uint32_t b0 = p.block_of(x);
  // orbit of the block under the induced action, with transversal words
  std::vector<Perm> block_gens;
  for (const Perm& gen : g.generators()) block_gens.push_back(action_on_blocks(p, gen));
  std::uint32_t nb = p.block_count();
  std::vector<std::int64_t> via_gen(nb, -1), via_from(nb, -1);
  std::vector<std::uint32_t> orbit{b0};
  std::vector<bool> in(nb, false);
  in[b0] = true;
  for (std::size_t h = 0; h < orbit.size(); ++h)
    for (std::size_t gi = 0; gi < block_gens.size(); ++gi) {
      std::uint32_t y = block_gens[gi][orbit[h]];
      if (!in[y]) {
        in[y] = true;
        via_gen[y] = static_cast<std::int64_t>(gi);
        via_from[y] = orbit[h];
        orbit.push_back(y);
      }
    }
  auto transversal = [&](std::uint32_t blk) {
    std::vector<std::size_t> word;
    for (std::uint32_t q = blk; q != b0; q = static_cast<std::uint32_t>(via_from[q]))
      word.push_back(static_cast<std::size_t>(via_gen[q]));
    std::reverse(word.begin(), word.end());
    Perm t(g.degree());
    for (std::size_t wi : word) t = t * g.generators()[wi];
    return t;
  };
  // Schreier generators
  std::vector<Perm> sgens;
  std::unordered_set<Perm, PermHash> seen;
  for (std::uint32_t blk : orbit) {
    Perm t = transversal(blk);
    for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
      std::uint32_t to = block_gens[gi][blk];
      Perm s = t * g.generators()[gi] * transversal(to).inverse();
      if (!s.is_identity() && seen.insert(s).second) sgens.push_back(std::move(s));
    }
  }
  return Group(g.degree(), std::move(sgens));
}

}  // namespace cartdec
