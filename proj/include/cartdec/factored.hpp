#ifndef CARTDEC_FACTORED_HPP
#define CARTDEC_FACTORED_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartdec/group.hpp"

namespace cartdec {

// consistency-certificate failures (reported, never silently ignored)
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FactorDomain {
  Point lo, hi;
};

enum class Simplicity { Verified, Failed, Unverified };

// M = T_1 x ... x T_k acting on the disjoint union of the factor domains.
// Factor data is supplied, never discovered; construction verifies that the
// factors commute, intersect trivially and multiply up to the ambient order.
class FactoredGroup {
public:
  FactoredGroup() = default;
  FactoredGroup(Group ambient, std::vector<Group> factors,
                std::vector<FactorDomain> domains);

  static FactoredGroup direct_product(const std::vector<Group>& groups);

  const Group& ambient() const { return ambient_; }
  std::size_t k() const { return factors_.size(); }
  const Group& factor(std::size_t i) const { return factors_[i]; }
  FactorDomain domain(std::size_t i) const { return domains_[i]; }
  Point degree() const { return ambient_.degree(); }

  // which factor domain a point belongs to
  std::size_t factor_of_point(Point p) const;

  // embed an element of factor i's abstract copy... elements of M are plain
  // degree-wide permutations; this restricts one to a single factor domain.
  Perm project_elem(std::size_t i, const Perm& m) const;

  // sigma_I: generator-wise restriction to the domains in I. Requires K <= M.
  Group sigma(const std::vector<std::size_t>& I, const Group& K) const;
  Group sigma_one(std::size_t i, const Group& K) const;
  Group sigma_complement(const std::vector<std::size_t>& I, const Group& K) const;

  bool factor_inside(std::size_t j, const Group& K) const;  // T_j <= K
  bool projection_trivial(std::size_t i, const Group& K) const;
  bool projection_full(std::size_t i, const Group& K) const;  // sigma_i(K) = T_i
  bool is_subdirect(const Group& K) const;

  void require_subgroup(const Group& K, const char* who) const;

  Simplicity simplicity(std::size_t i) const { return simplicity_[i]; }
  void verify_simplicity(std::uint64_t budget);
  void trust_simplicity();  // explicit waiver, recorded as Unverified->Verified? no:
                            // marks factors trusted without proof
  bool all_factors_simple_or_trusted() const;

  // the factor permutation induced by a normalizing ambient permutation,
  // nullopt if c does not permute the factor domains
  std::optional<Perm> factor_permutation(const Perm& c) const;

private:
  Group ambient_;
  std::vector<Group> factors_;
  std::vector<FactorDomain> domains_;
  std::vector<Simplicity> simplicity_;
  std::vector<bool> trusted_;
  std::vector<std::size_t> point_factor_;
  void verify_structure() const;
};

// shift a permutation group onto [offset, offset+degree)
Group embed_at(const Group& g, Point total_degree, Point offset);
Perm embed_perm_at(const Perm& p, Point total_degree, Point offset);

}  // namespace cartdec

#endif
