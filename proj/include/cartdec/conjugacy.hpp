#ifndef CARTDEC_CONJUGACY_HPP
#define CARTDEC_CONJUGACY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cartdec/group.hpp"

namespace cartdec {

struct ConjugacyResult {
  enum class Status { Found, NotConjugate, Truncated };
  Status status;
  std::optional<Perm> witness;   // h with A^h = B, verified exactly
  std::uint64_t orbit_size = 0;  // subgroups visited
};

// Orbit of A under conjugation by H, looking for B. Subgroups are keyed by
// their sorted element lists when small enough, otherwise bucketed by cheap
// invariants and compared exactly.
ConjugacyResult conjugate_subgroup_search(const Group& h, const Group& a,
                                          const Group& b,
                                          std::uint64_t orbit_budget = 100000,
                                          std::uint64_t key_budget = 100000);

// The same orbit computation driven by explicit conjugator generators (used
// when the acting group is presented by automorphisms rather than a chain).
ConjugacyResult conjugate_subgroup_search_gens(const std::vector<Perm>& conjugators,
                                               const Group& a, const Group& b,
                                               std::uint64_t orbit_budget = 100000,
                                               std::uint64_t key_budget = 100000);

}  // namespace cartdec

#endif
