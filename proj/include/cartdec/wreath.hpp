#ifndef CARTDEC_WREATH_HPP
#define CARTDEC_WREATH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cartdec/factored.hpp"
#include "cartdec/group.hpp"

namespace cartdec {

// L wr H in product action on Gamma^ell. The product action is materialized
// only below a threshold; the faithful imprimitive action on the disjoint
// union Gamma u ... u Gamma of degree ell*|Gamma| is always available and
// carries all subgroup computations.
struct WreathProduct {
  Group base_component;  // L on Gamma
  Group top;             // H <= Sym(ell)
  std::uint32_t ell = 0;
  Point gamma = 0;       // |Gamma|
  BigInt order;          // |L|^ell * |H|

  Group disjoint;                 // faithful, degree ell*gamma
  std::optional<Group> product;   // materialized product action if small

  BigInt product_domain_size() const;

  // tuples are little-endian coordinate lists of length ell
  std::uint64_t tuple_to_index(const std::vector<Point>& t) const;
  std::vector<Point> index_to_tuple(std::uint64_t idx) const;

  // lazy product action of a base tuple / top element on a product point
  std::vector<Point> apply_base(const std::vector<Point>& tuple,
                                const std::vector<Perm>& xs) const;
  std::vector<Point> apply_top(const std::vector<Point>& tuple,
                               const Perm& sigma) const;

  // realizations of single elements
  Perm base_elem_disjoint(const std::vector<Perm>& xs) const;
  Perm top_elem_disjoint(const Perm& sigma) const;
  Perm base_elem_product(const std::vector<Perm>& xs) const;  // requires materialized
  Perm top_elem_product(const Perm& sigma) const;
};

WreathProduct wreath_product(const Group& l, const Group& h,
                             std::uint64_t materialize_threshold = 100000);

// stabilizer of the product point (t_1,...,t_ell): point stabilizer on the
// materialized product action
Group tuple_stabilizer_product(const WreathProduct& w, const Group& g,
                               const std::vector<Point>& tuple);
// same computed on the disjoint-union action as a block-respecting set stabilizer
Group tuple_stabilizer_disjoint(const WreathProduct& w, const Group& g,
                                const std::vector<Point>& tuple);

// the permutation action of G on the factors {T_1,...,T_k} of a normal M;
// entry i of the result for generator g is the index j with T_i^g = T_j
std::vector<Perm> conjugation_action_on_factors(const Group& g, const FactoredGroup& m);

// certified given verified-simple nonabelian factors: minimal normal iff the
// factor action is transitive
bool is_minimal_normal(const Group& g, const FactoredGroup& m);

// coordinate projection of X <= N to factor i of the wreath base
Group mu(const FactoredGroup& n, std::size_t i, const Group& x);

}  // namespace cartdec

#endif
