#include "cartdec/factored.hpp"

#include <algorithm>
#include <unordered_set>

namespace cartdec {

Perm embed_perm_at(const Perm& p, Point total_degree, Point offset) {
  Perm r(total_degree);
  std::vector<Point> img = r.images();
  for (Point i = 0; i < p.degree(); ++i) img[offset + i] = offset + p[i];
  return Perm(std::move(img));
}

Group embed_at(const Group& g, Point total_degree, Point offset) {
  std::vector<Perm> gens;
  for (const Perm& p : g.generators())
    gens.push_back(embed_perm_at(p, total_degree, offset));
  return Group(total_degree, std::move(gens), g.name());
}

FactoredGroup::FactoredGroup(Group ambient, std::vector<Group> factors,
                             std::vector<FactorDomain> domains)
    : ambient_(std::move(ambient)),
      factors_(std::move(factors)),
      domains_(std::move(domains)) {
  if (factors_.empty() || factors_.size() != domains_.size())
    throw std::invalid_argument("FactoredGroup: factor/domain mismatch");
  simplicity_.assign(factors_.size(), Simplicity::Unverified);
  trusted_.assign(factors_.size(), false);
  point_factor_.assign(ambient_.degree(), SIZE_MAX);
  for (std::size_t i = 0; i < domains_.size(); ++i) {
    if (domains_[i].lo >= domains_[i].hi || domains_[i].hi > ambient_.degree())
      throw std::invalid_argument("FactoredGroup: bad domain range");
    for (Point p = domains_[i].lo; p < domains_[i].hi; ++p) {
      if (point_factor_[p] != SIZE_MAX)
        throw std::invalid_argument("FactoredGroup: overlapping domains");
      point_factor_[p] = i;
    }
  }
  for (auto f : point_factor_)
    if (f == SIZE_MAX) throw std::invalid_argument("FactoredGroup: uncovered point");
  verify_structure();
}

void FactoredGroup::verify_structure() const {
  // factors supported on their own domains; pairwise commuting and trivially
  // intersecting follows from disjoint supports
  BigInt prod = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (const Perm& g : factors_[i].generators()) {
      if (!g.maps_range_into(domains_[i].lo, domains_[i].hi))
        throw CheckFailure("FactoredGroup: factor leaves its domain");
      for (Point p = 0; p < g.degree(); ++p)
        if (g[p] != p && point_factor_[p] != i)
          throw CheckFailure("FactoredGroup: factor moves foreign points");
      if (!ambient_.contains(g))
        throw CheckFailure("FactoredGroup: factor not inside ambient");
    }
    prod *= factors_[i].order();
  }
  if (prod != ambient_.order())
    throw CheckFailure("FactoredGroup: product of factor orders != ambient order");
}

FactoredGroup FactoredGroup::direct_product(const std::vector<Group>& groups) {
  if (groups.empty())
    throw std::invalid_argument("direct_product: empty factor list");
  Point total = 0;
  for (const Group& g : groups) total += g.degree();
  std::vector<Group> factors;
  std::vector<FactorDomain> domains;
  std::vector<Perm> ambient_gens;
  Point off = 0;
  for (const Group& g : groups) {
    Group e = embed_at(g, total, off);
    for (const Perm& p : e.generators()) ambient_gens.push_back(p);
    domains.push_back({off, off + g.degree()});
    factors.push_back(std::move(e));
    off += g.degree();
  }
  return FactoredGroup(Group(total, std::move(ambient_gens)), std::move(factors),
                       std::move(domains));
}

std::size_t FactoredGroup::factor_of_point(Point p) const { return point_factor_[p]; }

Perm FactoredGroup::project_elem(std::size_t i, const Perm& m) const {
  if (!m.maps_range_into(domains_[i].lo, domains_[i].hi))
    throw CheckFailure("FactoredGroup: element does not preserve factor domain");
  return m.restricted_to(domains_[i].lo, domains_[i].hi);
}

void FactoredGroup::require_subgroup(const Group& K, const char* who) const {
  if (K.degree() != degree())
    throw std::invalid_argument(std::string(who) + ": degree mismatch");
  for (const Perm& g : K.generators())
    if (!ambient_.contains(g))
      throw std::invalid_argument(std::string(who) + ": not a subgroup of M");
}

Group FactoredGroup::sigma(const std::vector<std::size_t>& I, const Group& K) const {
  require_subgroup(K, "sigma");
  std::vector<bool> pick(degree(), false);
  for (std::size_t i : I)
    for (Point p = domains_[i].lo; p < domains_[i].hi; ++p) pick[p] = true;
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> seen;
  for (const Perm& g : K.generators()) {
    std::vector<Point> img(degree());
    for (Point p = 0; p < degree(); ++p) img[p] = pick[p] ? g[p] : p;
    Perm r{std::move(img)};
    if (!r.is_identity() && seen.insert(r).second) gens.push_back(std::move(r));
  }
  return Group(degree(), std::move(gens));
}

Group FactoredGroup::sigma_one(std::size_t i, const Group& K) const {
  return sigma({i}, K);
}

Group FactoredGroup::sigma_complement(const std::vector<std::size_t>& I,
                                      const Group& K) const {
  std::vector<bool> in(k(), false);
  for (std::size_t i : I) in[i] = true;
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < k(); ++i)
    if (!in[i]) comp.push_back(i);
  return sigma(comp, K);
}

bool FactoredGroup::factor_inside(std::size_t j, const Group& K) const {
  for (const Perm& g : factors_[j].generators())
    if (!K.contains(g)) return false;
  return true;
}

bool FactoredGroup::projection_trivial(std::size_t i, const Group& K) const {
  for (const Perm& g : K.generators())
    for (Point p = domains_[i].lo; p < domains_[i].hi; ++p)
      if (g[p] != p) return false;
  return true;
}

bool FactoredGroup::projection_full(std::size_t i, const Group& K) const {
  return sigma_one(i, K).order() == factors_[i].order();
}

bool FactoredGroup::is_subdirect(const Group& K) const {
  for (std::size_t i = 0; i < k(); ++i)
    if (!projection_full(i, K)) return false;
  return true;
}

void FactoredGroup::verify_simplicity(std::uint64_t budget) {
  for (std::size_t i = 0; i < k(); ++i) {
    auto r = is_simple(factors_[i], budget);
    if (!r.has_value())
      simplicity_[i] = trusted_[i] ? Simplicity::Verified : Simplicity::Unverified;
    else
      simplicity_[i] = *r ? Simplicity::Verified : Simplicity::Failed;
  }
}

void FactoredGroup::trust_simplicity() {
  trusted_.assign(k(), true);
  for (auto& s : simplicity_)
    if (s == Simplicity::Unverified) s = Simplicity::Verified;
}

bool FactoredGroup::all_factors_simple_or_trusted() const {
  for (std::size_t i = 0; i < k(); ++i) {
    if (simplicity_[i] == Simplicity::Failed) return false;
    if (simplicity_[i] == Simplicity::Unverified && !trusted_[i]) return false;
  }
  return true;
}

std::optional<Perm> FactoredGroup::factor_permutation(const Perm& c) const {
  std::vector<Point> img(k(), UINT32_MAX);
  for (std::size_t i = 0; i < k(); ++i) {
    std::size_t target = point_factor_[c[domains_[i].lo]];
    // the whole domain must land in one target domain, bijectively
    if (domains_[target].hi - domains_[target].lo != domains_[i].hi - domains_[i].lo)
      return std::nullopt;
    for (Point p = domains_[i].lo; p < domains_[i].hi; ++p)
      if (point_factor_[c[p]] != target) return std::nullopt;
    img[i] = static_cast<Point>(target);
  }
  std::vector<bool> hit(k(), false);
  for (Point t : img) {
    if (t == UINT32_MAX || hit[t]) return std::nullopt;
    hit[t] = true;
  }
  return Perm(std::vector<Point>(img.begin(), img.end()));
}

}  // namespace cartdec
