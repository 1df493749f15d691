#include "cartdec/coset.hpp"

#include <stdexcept>

#include "cartdec/factored.hpp"

namespace cartdec {

Perm canonical_coset_rep(const Chain& k_chain, Perm h) {
  for (std::size_t lvl = 0; lvl < k_chain.num_levels(); ++lvl) {
    const Chain::Level& L = k_chain.level(lvl);
    Point best = L.orbit[0];
    Point best_img = h[best];
    for (Point x : L.orbit)
      if (h[x] < best_img) {
        best = x;
        best_img = h[x];
      }
    if (best != L.base) h = k_chain.transversal(lvl, best) * h;
  }
  return h;
}

CosetSpace::CosetSpace(const Group& m, Group k) : k_(std::move(k)) {
  if (k_.degree() != m.degree())
    throw std::invalid_argument("CosetSpace: degree mismatch");
  if (!k_.is_subgroup_of(m))
    throw std::invalid_argument("CosetSpace: K is not a subgroup of M");
  const Chain& kc = k_.chain();

  BigInt count = m.order() / k_.order();
  if (count > 5'000'000)
    throw std::invalid_argument("CosetSpace: index too large to enumerate");

  Perm start = canonical_coset_rep(kc, Perm(m.degree()));
  reps_.push_back(start);
  index_.emplace(start, 0);
  gen_tables_.assign(m.generators().size(), {});

  for (std::uint32_t head = 0; head < reps_.size(); ++head) {
    for (std::size_t gi = 0; gi < m.generators().size(); ++gi) {
      Perm img = canonical_coset_rep(kc, reps_[head] * m.generators()[gi]);
      auto it = index_.find(img);
      std::uint32_t idx;
      if (it == index_.end()) {
        idx = static_cast<std::uint32_t>(reps_.size());
        index_.emplace(img, idx);
        reps_.push_back(std::move(img));
      } else {
        idx = it->second;
      }
      gen_tables_[gi].push_back(idx);  // slot for `head`, heads processed in order
    }
  }

  if (BigInt(reps_.size()) != count)
    throw CheckFailure("CosetSpace: enumeration did not reach |M:K| cosets");
}

std::uint32_t CosetSpace::index_of(const Perm& any_coset_element) const {
  Perm c = canonical_coset_rep(k_.chain(), any_coset_element);
  auto it = index_.find(c);
  if (it == index_.end())
    throw std::invalid_argument("CosetSpace: element outside the acting group");
  return it->second;
}

std::uint32_t CosetSpace::apply(std::uint32_t idx, const Perm& t) const {
  return index_of(reps_[idx] * t);
}

Perm CosetSpace::action_of(const Perm& t) const {
  std::vector<Point> img(size());
  for (std::uint32_t i = 0; i < size(); ++i) img[i] = apply(i, t);
  return Perm(std::move(img));
}

}  // namespace cartdec
