#ifndef CARTDEC_COSET_HPP
#define CARTDEC_COSET_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cartdec/group.hpp"

namespace cartdec {

// Canonical representative of the right coset K*h: the coset element whose
// base-image sequence along K's chain is lexicographically minimal. Fixed,
// deterministic, O(base length * degree).
Perm canonical_coset_rep(const Chain& k_chain, Perm h);

// The right coset space [M : K], enumerated breadth-first from K*1 in
// generator order; coset indices are therefore reproducible.
class CosetSpace {
public:
  CosetSpace(const Group& m, Group k);

  std::uint32_t size() const { return static_cast<std::uint32_t>(reps_.size()); }
  const Group& subgroup() const { return k_; }
  const Perm& rep(std::uint32_t idx) const { return reps_[idx]; }
  std::uint32_t base_index() const { return 0; }

  std::uint32_t index_of(const Perm& any_coset_element) const;
  std::uint32_t apply(std::uint32_t idx, const Perm& t) const;  // K r -> K r t
  // image table of one ambient generator (by position in m.generators())
  const std::vector<std::uint32_t>& gen_table(std::size_t gi) const {
    return gen_tables_[gi];
  }
  // the whole action as a permutation of the coset space
  Perm action_of(const Perm& t) const;

private:
  Group k_;
  std::vector<Perm> reps_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
  std::vector<std::vector<std::uint32_t>> gen_tables_;
};

}  // namespace cartdec

#endif
