#include "cartdec/wreath.hpp"

#include <stdexcept>

#include "cartdec/backtrack.hpp"

namespace cartdec {

BigInt WreathProduct::product_domain_size() const {
  BigInt s = 1;
  for (std::uint32_t i = 0; i < ell; ++i) s *= gamma;
  return s;
}

std::uint64_t WreathProduct::tuple_to_index(const std::vector<Point>& t) const {
  // little-endian: coordinate 0 is the least significant digit
  std::uint64_t idx = 0;
  for (std::uint32_t i = ell; i-- > 0;) idx = idx * gamma + t[i];
  return idx;
}

std::vector<Point> WreathProduct::index_to_tuple(std::uint64_t idx) const {
  std::vector<Point> t(ell);
  for (std::uint32_t i = 0; i < ell; ++i) {
    t[i] = static_cast<Point>(idx % gamma);
    idx /= gamma;
  }
  return t;
}

std::vector<Point> WreathProduct::apply_base(const std::vector<Point>& tuple,
                                             const std::vector<Perm>& xs) const {
  std::vector<Point> out(ell);
  for (std::uint32_t i = 0; i < ell; ++i) out[i] = xs[i][tuple[i]];
  return out;
}

std::vector<Point> WreathProduct::apply_top(const std::vector<Point>& tuple,
                                            const Perm& sigma) const {
  std::vector<Point> out(ell);
  for (std::uint32_t i = 0; i < ell; ++i) out[sigma[i]] = tuple[i];
  return out;
}

Perm WreathProduct::base_elem_disjoint(const std::vector<Perm>& xs) const {
  std::vector<Point> img(static_cast<std::size_t>(ell) * gamma);
  for (std::uint32_t i = 0; i < ell; ++i)
    for (Point p = 0; p < gamma; ++p)
      img[static_cast<std::size_t>(i) * gamma + p] =
          static_cast<Point>(i * gamma + xs[i][p]);
  return Perm(std::move(img));
}

Perm WreathProduct::top_elem_disjoint(const Perm& sigma) const {
  std::vector<Point> img(static_cast<std::size_t>(ell) * gamma);
  for (std::uint32_t i = 0; i < ell; ++i)
    for (Point p = 0; p < gamma; ++p)
      img[static_cast<std::size_t>(i) * gamma + p] = sigma[i] * gamma + p;
  return Perm(std::move(img));
}

Perm WreathProduct::base_elem_product(const std::vector<Perm>& xs) const {
  std::uint64_t n = product_domain_size().convert_to<std::uint64_t>();
  std::vector<Point> img(n);
  for (std::uint64_t idx = 0; idx < n; ++idx)
    img[idx] = static_cast<Point>(tuple_to_index(apply_base(index_to_tuple(idx), xs)));
  return Perm(std::move(img));
}

Perm WreathProduct::top_elem_product(const Perm& sigma) const {
  std::uint64_t n = product_domain_size().convert_to<std::uint64_t>();
  std::vector<Point> img(n);
  for (std::uint64_t idx = 0; idx < n; ++idx)
    img[idx] = static_cast<Point>(tuple_to_index(apply_top(index_to_tuple(idx), sigma)));
  return Perm(std::move(img));
}

WreathProduct wreath_product(const Group& l, const Group& h,
                             std::uint64_t materialize_threshold) {
  WreathProduct w;
  w.base_component = l;
  w.top = h;
  w.ell = h.degree();
  w.gamma = l.degree();
  if (w.ell == 0) throw std::invalid_argument("wreath_product: empty top domain");
  w.order = 1;
  for (std::uint32_t i = 0; i < w.ell; ++i) w.order *= l.order();
  w.order *= h.order();

  // faithful imprimitive action on the disjoint union
  std::vector<Perm> dis_gens;
  for (std::uint32_t i = 0; i < w.ell; ++i)
    for (const Perm& g : l.generators()) {
      std::vector<Perm> xs(w.ell, Perm(w.gamma));
      xs[i] = g;
      dis_gens.push_back(w.base_elem_disjoint(xs));
    }
  for (const Perm& s : h.generators()) dis_gens.push_back(w.top_elem_disjoint(s));
  w.disjoint = Group(static_cast<Point>(w.ell) * w.gamma, std::move(dis_gens));

  if (w.product_domain_size() <= materialize_threshold) {
    std::vector<Perm> pgens;
    for (std::uint32_t i = 0; i < w.ell; ++i)
      for (const Perm& g : l.generators()) {
        std::vector<Perm> xs(w.ell, Perm(w.gamma));
        xs[i] = g;
        pgens.push_back(w.base_elem_product(xs));
      }
    for (const Perm& s : h.generators()) pgens.push_back(w.top_elem_product(s));
    w.product = Group(static_cast<Point>(w.product_domain_size().convert_to<std::uint64_t>()),
                      std::move(pgens));
  }
  return w;
}

Group tuple_stabilizer_product(const WreathProduct& w, const Group& g,
                               const std::vector<Point>& tuple) {
  if (!w.product)
    throw std::invalid_argument("tuple_stabilizer_product: action not materialized");
  return g.point_stabilizer(static_cast<Point>(w.tuple_to_index(tuple)));
}

Group tuple_stabilizer_disjoint(const WreathProduct& w, const Group& g,
                                const std::vector<Point>& tuple) {
  std::vector<Point> pts;
  for (std::uint32_t i = 0; i < w.ell; ++i)
    pts.push_back(static_cast<Point>(i * w.gamma + tuple[i]));
  // one marked point per block: the set stabilizer in a block-respecting
  // group is exactly the product-action point stabilizer
  return set_stabilizer(g, pts);
}

std::vector<Perm> conjugation_action_on_factors(const Group& g,
                                                const FactoredGroup& m) {
  // normality of M in G is a precondition, checked here
  for (const Perm& x : g.generators())
    for (const Perm& t : m.ambient().generators())
      if (!m.ambient().contains(conjugate(t, x)))
        throw std::invalid_argument("conjugation_action_on_factors: M not normal in G");

  std::vector<Perm> actions;
  for (const Perm& x : g.generators()) {
    std::vector<Point> img(m.k(), UINT32_MAX);
    for (std::size_t i = 0; i < m.k(); ++i) {
      // T_i^x is some T_j: locate j by membership of the conjugated generators
      std::size_t j = SIZE_MAX;
      Perm probe = conjugate(m.factor(i).generators()[0], x);
      for (std::size_t cand = 0; cand < m.k(); ++cand)
        if (m.factor(cand).contains(probe)) {
          j = cand;
          break;
        }
      if (j == SIZE_MAX)
        throw CheckFailure("conjugation_action_on_factors: conjugated factor not a factor");
      for (const Perm& t : m.factor(i).generators())
        if (!m.factor(j).contains(conjugate(t, x)))
          throw CheckFailure("conjugation_action_on_factors: factor image straddles factors");
      img[i] = static_cast<Point>(j);
    }
    actions.emplace_back(std::vector<Point>(img.begin(), img.end()));
  }
  return actions;
}

bool is_minimal_normal(const Group& g, const FactoredGroup& m) {
  std::vector<Perm> actions = conjugation_action_on_factors(g, m);  // checks normality
  if (!m.all_factors_simple_or_trusted())
    throw std::invalid_argument("is_minimal_normal: factor simplicity not established");
  Group factor_action(static_cast<Point>(m.k()), actions);
  return factor_action.is_transitive();
}

Group mu(const FactoredGroup& n, std::size_t i, const Group& x) {
  return n.sigma_one(i, x);
}

}  // namespace cartdec
