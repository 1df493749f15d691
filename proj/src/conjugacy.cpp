#include "cartdec/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cartdec {

namespace {

std::uint64_t subgroup_key(const Group& g, std::uint64_t key_budget) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  auto elems = g.elements(key_budget);
  if (elems) {
    std::sort(elems->begin(), elems->end());
    for (const Perm& e : *elems) mix(e.hash());
    return h;
  }
  // over budget: a weak invariant key, exact comparison disambiguates
  mix(g.order().convert_to<std::uint64_t>());
  std::vector<std::size_t> orbit_sizes;
  for (auto& o : g.orbits()) orbit_sizes.push_back(o.size());
  std::sort(orbit_sizes.begin(), orbit_sizes.end());
  for (auto s : orbit_sizes) mix(s);
  return h;
}

}  // namespace

ConjugacyResult conjugate_subgroup_search_gens(const std::vector<Perm>& conjugators,
                                               const Group& a, const Group& b,
                                               std::uint64_t orbit_budget,
                                               std::uint64_t key_budget) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("conjugate_subgroup_search: degree mismatch");
  ConjugacyResult out{ConjugacyResult::Status::NotConjugate, std::nullopt, 0};
  if (a.same_group_as(b)) {
    out.status = ConjugacyResult::Status::Found;
    out.witness = Perm(a.degree());
    out.orbit_size = 1;
    return out;
  }
  std::uint64_t bkey = subgroup_key(b, key_budget);
  std::vector<Group> orbit{a};
  std::vector<Perm> witness{Perm(a.degree())};
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  buckets[subgroup_key(a, key_budget)].push_back(0);

  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const Perm& c : conjugators) {
      Group img = orbit[head].conjugated_by(c);
      std::uint64_t key = subgroup_key(img, key_budget);
      auto& bucket = buckets[key];
      bool known = false;
      for (std::size_t idx : bucket)
        if (orbit[idx].same_group_as(img)) {
          known = true;
          break;
        }
      if (known) continue;
      Perm w = witness[head] * c;
      if (key == bkey && img.same_group_as(b)) {
        // verify the witness exactly: A^w = B
        Group check = a.conjugated_by(w);
        if (!check.same_group_as(b))
          throw std::runtime_error("conjugate_subgroup_search: witness verification failed");
        out.status = ConjugacyResult::Status::Found;
        out.witness = std::move(w);
        out.orbit_size = orbit.size() + 1;
        return out;
      }
      bucket.push_back(orbit.size());
      orbit.push_back(std::move(img));
      witness.push_back(std::move(w));
      if (orbit.size() > orbit_budget) {
        out.status = ConjugacyResult::Status::Truncated;
        out.orbit_size = orbit.size();
        return out;
      }
    }
  }
  out.status = ConjugacyResult::Status::NotConjugate;
  out.orbit_size = orbit.size();
  return out;
}

ConjugacyResult conjugate_subgroup_search(const Group& h, const Group& a,
                                          const Group& b, std::uint64_t orbit_budget,
                                          std::uint64_t key_budget) {
  return conjugate_subgroup_search_gens(h.generators(), a, b, orbit_budget,
                                        key_budget);
}

}  // namespace cartdec
