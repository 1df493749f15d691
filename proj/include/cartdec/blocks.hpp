#ifndef CARTDEC_BLOCKS_HPP
#define CARTDEC_BLOCKS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cartdec/group.hpp"

namespace cartdec {

// A partition of {0,...,n-1} into labelled blocks. Block ids are contiguous
// and normalized to first-occurrence order, so equal partitions compare equal.
class Partition {
public:
  Partition() = default;
  Partition(std::vector<std::uint32_t> block_of, std::uint32_t block_count);
  static Partition singletons(Point n);
  static Partition one_block(Point n);
  static Partition from_blocks(Point n, const std::vector<std::vector<Point>>& blocks);

  Point size() const { return static_cast<Point>(block_of_.size()); }
  std::uint32_t block_count() const { return block_count_; }
  std::uint32_t block_of(Point x) const { return block_of_[x]; }
  const std::vector<std::uint32_t>& assignment() const { return block_of_; }
  std::vector<std::vector<Point>> blocks() const;

  bool is_trivial() const {  // singletons or one block
    return block_count_ == size() || block_count_ == 1;
  }

  // the image partition {B^g : B}
  Partition apply(const Perm& g) const;
  // finest common coarsening
  Partition join(const Partition& other) const;

  bool invariant_under(const Perm& g) const;
  bool invariant_under(const Group& g) const;

  bool operator==(const Partition& o) const {
    return block_of_ == o.block_of_;
  }
  bool operator<(const Partition& o) const { return block_of_ < o.block_of_; }

private:
  std::vector<std::uint32_t> block_of_;
  std::uint32_t block_count_ = 0;
  void normalize();
};

// finest G-invariant partition where x and y share a block (union-find closure)
Partition block_system_from_seed(const Group& g, Point x, Point y);

struct BlockSystems {
  std::vector<Partition> systems;  // sorted by canonical key, includes trivial ones
  bool truncated = false;
};

// all partitions obtainable as joins of seed-generated minimal systems
BlockSystems all_block_systems(const Group& g, std::uint64_t budget);

// permutation induced by g on the blocks of an invariant partition
Perm action_on_blocks(const Partition& p, const Perm& g);

// stabilizer of the block containing x, by Schreier generators over the
// block orbit; exact, no backtracking
Group block_stabilizer(const Group& g, const Partition& p, Point x);

}  // namespace cartdec

#endif
