#include "cartdec/strips.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cartdec/backtrack.hpp"

namespace cartdec {

namespace {

// factor i of M with the embedding offset removed
Group unembed(const FactoredGroup& m, std::size_t i) {
  FactorDomain d = m.domain(i);
  Point deg = d.hi - d.lo;
  std::vector<Perm> gens;
  for (const Perm& g : m.factor(i).generators()) {
    std::vector<Point> img(deg);
    for (Point p = 0; p < deg; ++p) img[p] = g[d.lo + p] - d.lo;
    gens.emplace_back(std::move(img));
  }
  return Group(deg, std::move(gens), m.factor(i).name());
}

}  // namespace

std::vector<std::size_t> support_of(const FactoredGroup& m, const Group& x) {
  m.require_subgroup(x, "support_of");
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < m.k(); ++i)
    if (!m.projection_trivial(i, x)) s.push_back(i);
  return s;
}

bool is_strip(const FactoredGroup& m, const Group& x) {
  auto supp = support_of(m, x);
  BigInt ox = x.order();
  for (std::size_t i : supp)
    if (m.sigma_one(i, x).order() != ox) return false;
  return true;
}

bool is_full_strip(const FactoredGroup& m, const Group& x) {
  auto supp = support_of(m, x);
  BigInt ox = x.order();
  for (std::size_t i : supp) {
    Group pi = m.sigma_one(i, x);
    if (pi.order() != ox || pi.order() != m.factor(i).order()) return false;
  }
  return true;
}

StripDecomposition scott_decompose(const FactoredGroup& m, const Group& h) {
  for (std::size_t i = 0; i < m.k(); ++i)
    if (!m.projection_full(i, h))
      throw std::invalid_argument("scott_decompose: subgroup is not subdirect");

  // link factors whose pairwise projection is not the full product
  std::vector<std::size_t> root(m.k());
  for (std::size_t i = 0; i < m.k(); ++i) root[i] = i;
  auto find = [&root](std::size_t x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < m.k(); ++i)
    for (std::size_t j = i + 1; j < m.k(); ++j) {
      BigInt full = m.factor(i).order() * m.factor(j).order();
      if (m.sigma({i, j}, h).order() != full) {
        std::size_t a = find(i), b = find(j);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
    }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < m.k(); ++i) classes[find(i)].push_back(i);

  StripDecomposition out;
  BigInt prod = 1;
  for (auto& [r, supp] : classes) {
    Strip s;
    s.support = supp;
    s.component = m.sigma(supp, h);
    if (!is_full_strip(m, s.component) || support_of(m, s.component) != supp)
      throw CheckFailure("scott_decompose: class projection is not a full strip");
    s.full = true;
    prod *= s.component.order();
    out.strips.push_back(std::move(s));
  }
  if (prod != h.order())
    throw CheckFailure("scott_decompose: strip orders do not multiply to |H|");
  return out;
}

Strip involved_full_strip(const FactoredGroup& m, const Group& k, std::size_t fm) {
  m.require_subgroup(k, "involved_full_strip");
  if (!m.projection_full(fm, k))
    throw std::invalid_argument("involved_full_strip: sigma_m(K) != T_m");

  BigInt tm = m.factor(fm).order();
  std::vector<std::size_t> supp;
  for (std::size_t t = 0; t < m.k(); ++t) {
    if (t == fm) {
      supp.push_back(t);
      continue;
    }
    if (m.projection_full(t, k) && m.sigma({fm, t}, k).order() == tm)
      supp.push_back(t);
  }
  std::sort(supp.begin(), supp.end());

  Strip s;
  s.support = supp;
  s.component = m.sigma(supp, k);
  // certificates: X a full diagonal strip, X <= K, and K = X x sigma_comp(K)
  if (s.component.order() != tm || !is_full_strip(m, s.component))
    throw CheckFailure("involved_full_strip: support scan did not yield a full strip");
  if (!s.component.is_subgroup_of(k))
    throw CheckFailure("involved_full_strip: strip is not inside K");
  Group comp = m.sigma_complement(supp, k);
  if (s.component.order() * comp.order() != k.order())
    throw CheckFailure("involved_full_strip: direct complement order check failed");
  s.full = true;
  return s;
}

std::vector<Strip> strips_involved_in(const FactoredGroup& m, const Group& k) {
  std::vector<Strip> out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t fm = 0; fm < m.k(); ++fm) {
    if (!m.projection_full(fm, k)) continue;
    Strip s = involved_full_strip(m, k, fm);
    if (!s.nontrivial()) continue;
    if (seen.insert(s.support).second) out.push_back(std::move(s));
  }
  return out;
}

bool check_factorization(const Group& t, const Group& a, const Group& b) {
  if (!a.is_subgroup_of(t) || !b.is_subgroup_of(t))
    throw std::invalid_argument("check_factorization: not subgroups of T");
  if (a.order() >= t.order() || b.order() >= t.order()) return false;  // proper
  return product_size(a, b) == t.order();
}

SmfReport check_strong_multiple_factorization(const Group& t, const Group& a,
                                              const Group& b, const Group& c) {
  SmfReport rep;
  const Group* g[3] = {&a, &b, &c};
  const char* names[3] = {"A", "B", "C"};
  for (int i = 0; i < 3; ++i) {
    if (!g[i]->is_subgroup_of(t)) {
      rep.violations.push_back(std::string(names[i]) + " is not a subgroup of T");
      return rep;
    }
    if (g[i]->order() >= t.order())
      rep.violations.push_back(std::string(names[i]) + " is not proper");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (g[i]->same_group_as(*g[j]))
        rep.violations.push_back(std::string(names[i]) + " = " + names[j] +
                                 " (members must be distinct)");
  if (!rep.violations.empty()) return rep;

  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, l = (i + 2) % 3;
    Group meet = intersect(*g[j], *g[l]);
    Group triple = intersect(meet, *g[i]);
    BigInt prod = g[i]->order() * meet.order() / triple.order();
    if (prod != t.order()) {
      std::ostringstream os;
      os << names[i] << "(" << names[j] << " n " << names[l] << ") has order "
         << prod.str() << " != |T| = " << t.order().str();
      rep.violations.push_back(os.str());
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

FsfReport check_fsf_instance(const FactoredGroup& m, const Group& k, const Group& d) {
  m.require_subgroup(k, "check_fsf_instance");
  m.require_subgroup(d, "check_fsf_instance");
  auto dsupp = support_of(m, d);
  if (dsupp.size() != m.k() || !is_full_strip(m, d))
    throw std::invalid_argument("check_fsf_instance: D is not a full strip on all factors");
  for (std::size_t i = 0; i < m.k(); ++i)
    if (m.projection_full(i, k))
      throw std::invalid_argument("check_fsf_instance: sigma_i(K) must be proper for all i");

  FsfReport rep;
  Group meet = intersect(d, k);
  BigInt prod = d.order() * k.order() / meet.order();
  rep.product_is_m = (prod == m.ambient().order());
  {
    std::ostringstream os;
    os << "|D K| = " << prod.str() << ", |M| = " << m.ambient().order().str();
    rep.notes.push_back(os.str());
  }
  if (!rep.product_is_m) return rep;

  if (m.k() > 3) {
    rep.k_exceeds_bound = true;  // contradicts the k <= 3 bound
    rep.notes.push_back("factorization with k > 3: expected never");
    return rep;
  }
  if (m.k() == 3) {
    // pull the projections of K back to factor 0 through the strip's
    // coordinate isomorphisms and test the strong multiple factorization
    auto delems = d.elements(1000000);
    if (!delems) {
      rep.notes.push_back("strip too large to enumerate for the smf pullback");
      return rep;
    }
    // alpha_i^{-1}: sigma_i(strip element) -> sigma_0(strip element)
    std::vector<std::unordered_map<Perm, Perm, PermHash>> back(m.k());
    for (const Perm& e : *delems) {
      Perm e0 = m.project_elem(0, e);
      for (std::size_t i = 1; i < m.k(); ++i)
        back[i].emplace(m.project_elem(i, e), e0);
    }
    auto pull = [&](std::size_t i, const Group& proj) {
      std::vector<Perm> gens;
      auto elems = proj.elements(1000000);
      if (!elems) throw CheckFailure("check_fsf_instance: projection too large");
      for (const Perm& e : *elems) {
        auto it = back[i].find(e);
        if (it == back[i].end())
          throw CheckFailure("check_fsf_instance: projection escapes the strip image");
        gens.push_back(it->second);
      }
      return Group(m.degree(), std::move(gens));
    };
    Group a0 = m.sigma_one(0, k);
    Group a1 = pull(1, m.sigma_one(1, k));
    Group a2 = pull(2, m.sigma_one(2, k));
    Group t0 = m.factor(0);
    SmfReport smf = check_strong_multiple_factorization(t0, a0, a1, a2);
    rep.smf_verified = smf.ok;
    for (auto& v : smf.violations) rep.notes.push_back("smf: " + v);
  }
  return rep;
}

Group strip_product(const FactoredGroup& m, const std::vector<Strip>& strips) {
  if (strips.empty()) throw std::invalid_argument("strip_product: empty strip list");
  std::set<std::size_t> used;
  std::vector<Perm> gens;
  BigInt expect = 1;
  for (const Strip& s : strips) {
    if (!s.nontrivial())
      throw std::invalid_argument("strip_product: strips must be non-trivial");
    for (std::size_t i : s.support)
      if (!used.insert(i).second)
        throw std::invalid_argument("strip_product: supports are not pairwise disjoint");
    if (!is_strip(m, s.component))
      throw std::invalid_argument("strip_product: component is not a strip");
    for (const Perm& g : s.component.generators()) gens.push_back(g);
    expect *= s.component.order();
  }
  Group p(m.degree(), std::move(gens));
  if (p.order() != expect)
    throw CheckFailure("strip_product: order is not the product of strip orders");
  return p;
}

bool no_strip_product_factorization_probe(const FactoredGroup& m, const Group& a,
                                          const Group& b) {
  m.require_subgroup(a, "no_strip_product_factorization_probe");
  m.require_subgroup(b, "no_strip_product_factorization_probe");
  return product_size(a, b) < m.ambient().order();
}

Strip make_diagonal_strip(const FactoredGroup& m, const std::vector<std::size_t>& support,
                          const std::vector<Perm>& twists) {
  if (support.size() < 1 || twists.size() != support.size())
    throw std::invalid_argument("make_diagonal_strip: support/twist mismatch");
  Group t0 = unembed(m, support[0]);
  std::vector<Perm> gens;
  for (const Perm& x : t0.generators()) {
    Perm g(m.degree());
    for (std::size_t j = 0; j < support.size(); ++j) {
      FactorDomain dj = m.domain(support[j]);
      if (dj.hi - dj.lo != t0.degree())
        throw std::invalid_argument("make_diagonal_strip: unequal factor domains");
      Perm xi = conjugate(x, twists[j]);
      g = g * embed_perm_at(xi, m.degree(), dj.lo);
    }
    gens.push_back(std::move(g));
  }
  Strip s;
  s.support = support;
  std::sort(s.support.begin(), s.support.end());
  s.component = Group(m.degree(), std::move(gens));
  m.require_subgroup(s.component, "make_diagonal_strip");  // twists must normalize T
  if (!is_full_strip(m, s.component) || support_of(m, s.component) != s.support)
    throw CheckFailure("make_diagonal_strip: construction is not a full strip");
  s.full = true;
  return s;
}

}  // namespace cartdec
