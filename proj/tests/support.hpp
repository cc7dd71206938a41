#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "heckefuse/catalog.hpp"
#include "heckefuse/group.hpp"
#include "heckefuse/perm.hpp"

namespace hf_test {

using namespace heckefuse;

inline Perm P(const std::string& cycles, std::size_t degree) { return Perm::from_cycles(cycles, degree); }

inline GroupPtr closure(std::size_t degree, std::initializer_list<const char*> gens) {
  std::vector<Perm> g;
  for (const char* s : gens) g.push_back(P(s, degree));
  return FiniteGroup::closure(degree, g);
}

inline SubgroupPtr generated(const GroupPtr& G, std::initializer_list<const char*> gens) {
  std::vector<Elem> idx;
  for (const char* s : gens) idx.push_back(G->index_of(P(s, G->degree())));
  return Subgroup::generated(G, idx);
}

inline Elem E(const GroupPtr& G, const std::string& cycles) { return G->index_of(P(cycles, G->degree())); }

inline FinitePair pair(const std::string& name) { return load_finite_pair(find_entry(bundled_catalog(), name)); }

/// Every permutation of {0..n-1}, by std::next_permutation.
inline std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Point> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Point>(i);
  std::vector<Perm> out;
  do out.emplace_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::set<Perm> perm_set(const Subgroup& s) {
  std::set<Perm> out;
  for (Elem e : s.elements()) out.insert(s.parent().element(e));
  return out;
}

// Bi-invariant functions on a finite G, convolved over right cosets:
// (f * g)(x) = sum_{Gamma y} f(x y^-1) g(y).
struct FunctionModel {
  const FiniteGroup& G;
  const Subgroup& gamma;
  std::vector<Elem> coset_reps;

  FunctionModel(const FiniteGroup& g, const Subgroup& h) : G(g), gamma(h) {
    std::set<std::set<Elem>> seen;
    for (Elem y = 0; y < G.order(); ++y) {
      std::set<Elem> coset;
      for (Elem c : gamma.elements()) coset.insert(G.mul(c, y));
      if (seen.insert(coset).second) coset_reps.push_back(*coset.begin());
    }
  }

  std::vector<std::int64_t> indicator(Elem rep) const {
    std::vector<std::int64_t> f(G.order(), 0);
    for (Elem a : gamma.elements())
      for (Elem b : gamma.elements()) f[G.mul(G.mul(a, rep), b)] = 1;
    return f;
  }

  std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& f, const std::vector<std::int64_t>& g) const {
    std::vector<std::int64_t> out(G.order(), 0);
    for (Elem x = 0; x < G.order(); ++x)
      for (Elem y : coset_reps) out[x] += f[G.mul(x, G.inv(y))] * g[y];
    return out;
  }
};

using IntMat = std::array<std::int64_t, 4>;  // a b / c d

inline IntMat mat_mul(const IntMat& x, const IntMat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Row reduction by SL(2,Z) on the left down to [[a, b], [0, d]], a, d > 0, 0 <= b < d.
inline IntMat row_hnf(IntMat m) {
  while (m[2] != 0) {
    const std::int64_t q = floor_div(m[0], m[2]);
    m[0] -= q * m[2];
    m[1] -= q * m[3];
    m = {m[2], m[3], -m[0], -m[1]};
  }
  if (m[0] < 0) m = {-m[0], -m[1], -m[2], -m[3]};
  const std::int64_t k = floor_div(m[1], m[3]);
  m[1] -= k * m[3];
  return m;
}

// All right cosets SL(2,Z) g with g integral of determinant d1 d2 and entry gcd d1.
inline std::vector<IntMat> gl2_cosets(std::int64_t d1, std::int64_t d2) {
  const std::int64_t n = d1 * d2;
  std::vector<IntMat> out;
  for (std::int64_t a = 1; a <= n; ++a) {
    if (n % a) continue;
    const std::int64_t d = n / a;
    for (std::int64_t b = 0; b < d; ++b)
      if (std::gcd(std::gcd(a, b), d) == d1) out.push_back({a, b, 0, d});
  }
  return out;
}

inline std::int64_t entry_gcd(const IntMat& m) { return std::gcd(std::gcd(m[0], m[1]), std::gcd(m[2], m[3])); }

// coefficient of T(z1,z2) in T(x1,x2) T(y1,y2): pairs landing in the right coset of diag(z1,z2)
inline std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> gl2_oracle(std::int64_t x1, std::int64_t x2,
                                                                        std::int64_t y1, std::int64_t y2) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> out;
  const auto xs = gl2_cosets(x1, x2), ys = gl2_cosets(y1, y2);
  std::set<std::pair<std::int64_t, std::int64_t>> support;
  for (const auto& a : xs)
    for (const auto& b : ys) {
      const IntMat p = mat_mul(a, b);
      const std::int64_t g = entry_gcd(p);
      support.insert({g, x1 * x2 * y1 * y2 / g});
    }
  for (const auto& [z1, z2] : support) {
    const IntMat target = row_hnf({z1, 0, 0, z2});
    std::int64_t count = 0;
    for (const auto& a : xs)
      for (const auto& b : ys)
        if (row_hnf(mat_mul(a, b)) == target) ++count;
    out[{z1, z2}] = count;
  }
  return out;
}

}  // namespace hf_test
