#ifndef CARTDEC_STRIPS_HPP
#define CARTDEC_STRIPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cartdec/factored.hpp"

namespace cartdec {

// A strip X <= T_1 x ... x T_k: every nontrivial coordinate projection has
// order |X| (order equality certifies the projections are injective on X).
struct Strip {
  std::vector<std::size_t> support;  // sorted factor indices
  Group component;                   // X inside M's ambient degree
  bool full = false;                 // sigma_i(X) = T_i on the support
  bool nontrivial() const { return support.size() >= 2; }
};

std::vector<std::size_t> support_of(const FactoredGroup& m, const Group& x);
bool is_strip(const FactoredGroup& m, const Group& x);
bool is_full_strip(const FactoredGroup& m, const Group& x);

struct StripDecomposition {
  std::vector<Strip> strips;  // pairwise disjoint, full; product certified = H
};

// Scott decomposition of a subdirect subgroup into pairwise disjoint full
// strips; order-product certified, error if H is not subdirect
StripDecomposition scott_decompose(const FactoredGroup& m, const Group& h);

// the unique full strip covering T_m involved in K (requires sigma_m(K)=T_m);
// support scan plus a direct-complement order certificate
Strip involved_full_strip(const FactoredGroup& m, const Group& k, std::size_t fm);

// all nontrivial full strips involved in K, deduplicated by support
std::vector<Strip> strips_involved_in(const FactoredGroup& m, const Group& k);

// T = AB with A, B proper, by order arithmetic
bool check_factorization(const Group& t, const Group& a, const Group& b);

struct SmfReport {
  bool ok = false;
  std::vector<std::string> violations;  // per-identity diagnostics
};
// {A,B,C} a strong multiple factorisation of T: three rotated identities,
// pairwise distinct proper subgroups
SmfReport check_strong_multiple_factorization(const Group& t, const Group& a,
                                              const Group& b, const Group& c);

struct FsfReport {
  bool product_is_m = false;        // D*K = M by order arithmetic
  bool k_exceeds_bound = false;     // red flag: factorization with k > 3
  bool smf_verified = false;        // for k = 3: pulled-back projections form an smf
  std::vector<std::string> notes;
};
// the full-strip factorization bound: D a full strip supported everywhere,
// K with all projections proper
FsfReport check_fsf_instance(const FactoredGroup& m, const Group& k, const Group& d);

// direct product of pairwise disjoint nontrivial strips, validated
Group strip_product(const FactoredGroup& m, const std::vector<Strip>& strips);

// |A||B|/|A n B| < |M| for strip products A, B; a false return is a red flag
bool no_strip_product_factorization_probe(const FactoredGroup& m, const Group& a,
                                          const Group& b);

// builds the twisted diagonal strip {(t, a_2(t), ..., a_s(t))} over the given
// support where a_j = (shift to factor j) after conjugation by twist[j]
Strip make_diagonal_strip(const FactoredGroup& m, const std::vector<std::size_t>& support,
                          const std::vector<Perm>& twists);

}  // namespace cartdec

#endif
