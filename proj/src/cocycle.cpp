#include "heckefuse/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>

namespace heckefuse {

namespace {

constexpr std::uint64_t kMaxGeneratorAssignments = 1u << 22;

std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t m) { return (a + m - b % m) % m; }

std::complex<double> root_of_unity(std::uint32_t e, std::uint32_t m) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

void require_same_group(const Cocycle2& a, const Cocycle2& b) {
  if (!a.group() || !b.group() || !(*a.group() == *b.group()))
    throw DomainError("cocycles live on different groups");
}

// BFS spanning tree over the greedy generators: order[i] is reached as
// gen[i] * from[i].
struct SpanningTree {
  std::vector<std::size_t> order, gen, from;
};

SpanningTree spanning_tree(const Subgroup& h) {
  SpanningTree tree;
  std::vector<bool> seen(h.order(), false);
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  std::vector<std::size_t> gens;
  for (Elem g : h.generators()) gens.push_back(h.local_of(g));
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t s : gens) {
      std::size_t y = h.local_mul(s, x);
      if (!seen[y]) {
        seen[y] = true;
        tree.order.push_back(y);
        tree.gen.push_back(s);
        tree.from.push_back(x);
        queue.push_back(y);
      }
    }
  }
  return tree;
}

// Enumerates normalized phi with phi(g) + phi(h) - phi(gh) = c(g, h) mod m.
std::vector<ScalarFunction> solve_coboundary(const SubgroupPtr& group, std::uint32_t m,
                                             const std::vector<std::uint32_t>& c, bool all) {
  const Subgroup& h = *group;
  const std::size_t n = h.order();
  const SpanningTree tree = spanning_tree(h);
  std::vector<std::size_t> gens;
  for (Elem g : h.generators()) gens.push_back(h.local_of(g));

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    total *= m;
    if (total > kMaxGeneratorAssignments) throw CapExceeded("cohomology search space too large");
  }

  std::vector<ScalarFunction> out;
  std::vector<std::uint32_t> assignment(gens.size(), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (auto& a : assignment) {
      a = static_cast<std::uint32_t>(rest % m);
      rest /= m;
    }
    std::vector<std::uint32_t> phi(n, 0);
    std::vector<bool> fixed(n, false);
    fixed[0] = true;
    bool ok = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      phi[gens[i]] = assignment[i];
      fixed[gens[i]] = true;
    }
    for (std::size_t i = 0; i < tree.order.size() && ok; ++i) {
      const std::size_t x = tree.order[i], s = tree.gen[i], y = tree.from[i];
      const std::uint32_t v = mod_sub((phi[s] + phi[y]) % m, c[s * n + y], m);
      if (fixed[x] && phi[x] != v) ok = false;
      phi[x] = v;
      fixed[x] = true;
    }
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if (mod_sub((phi[a] + phi[b]) % m, phi[h.local_mul(a, b)], m) != c[a * n + b] % m) ok = false;
    if (!ok) continue;
    out.push_back(ScalarFunction{group, m, std::move(phi)});
    if (!all) break;
  }
  return out;
}

}  // namespace

ScalarFunction ScalarFunction::zero(SubgroupPtr group, std::uint32_t modulus) {
  const std::size_t n = group->order();
  return ScalarFunction{std::move(group), modulus, std::vector<std::uint32_t>(n, 0)};
}

std::complex<double> ScalarFunction::value(std::size_t local) const { return root_of_unity(values[local], modulus); }

Cocycle2 Cocycle2::trivial(SubgroupPtr group, std::uint32_t modulus) {
  const std::size_t n = group->order();
  return Cocycle2(std::move(group), modulus, std::vector<std::uint32_t>(n * n, 0));
}

std::optional<CocycleViolation> find_cocycle_violation(const Subgroup& group, std::uint32_t m,
                                                       const std::vector<std::uint32_t>& t) {
  const std::size_t n = group.order();
  if (t.size() != n * n) throw DomainError("cocycle table has the wrong size");
  for (std::size_t g = 0; g < n; ++g) {
    if (t[g] % m != 0) return CocycleViolation(0, g, 0);
    if (t[g * n] % m != 0) return CocycleViolation(g, 0, 0);
  }
  // Omega(g,h) Omega(gh,k) = Omega(h,k) Omega(g,hk)
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t gh = group.local_mul(g, h);
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t hk = group.local_mul(h, k);
        if ((t[g * n + h] + t[gh * n + k]) % m != (t[h * n + k] + t[g * n + hk]) % m)
          return CocycleViolation(g, h, k);
      }
    }
  return std::nullopt;
}

Cocycle2 Cocycle2::from_table(SubgroupPtr group, std::uint32_t modulus, std::vector<std::uint32_t> table) {
  if (modulus == 0) throw DomainError("cocycle modulus must be positive");
  const std::size_t n = group->order();
  if (table.size() != n * n) throw DomainError("cocycle table has the wrong size");
  for (auto& e : table) e %= modulus;
  // The identity forces Omega(e, g) = Omega(g, e) = Omega(e, e); dividing by
  // the coboundary of the constant function Omega(e, e) normalizes.
  const std::uint32_t c = table[0];
  for (auto& e : table) e = mod_sub(e, c, modulus);
  if (auto violation = find_cocycle_violation(*group, modulus, table)) throw *violation;
  return Cocycle2(std::move(group), modulus, std::move(table));
}

void validate(const Cocycle2& omega) {
  if (auto violation = find_cocycle_violation(*omega.group(), omega.modulus(), omega.table())) throw *violation;
}

std::complex<double> Cocycle2::value(std::size_t g, std::size_t h) const {
  return root_of_unity(exponent(g, h), modulus_);
}

bool Cocycle2::is_trivial() const {
  return std::all_of(table_.begin(), table_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Cocycle2::same_values(const Cocycle2& other) const {
  if (!group_ || !other.group_ || !(*group_ == *other.group_)) return false;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (static_cast<std::uint64_t>(table_[i]) * other.modulus_ !=
        static_cast<std::uint64_t>(other.table_[i]) * modulus_)
      return false;
  }
  return true;
}

Cocycle2 Cocycle2::lifted(std::uint32_t modulus) const {
  if (modulus % modulus_ != 0) throw DomainError("can only lift a cocycle to a multiple of its modulus");
  const std::uint32_t factor = modulus / modulus_;
  std::vector<std::uint32_t> t(table_);
  for (auto& e : t) e *= factor;
  return Cocycle2(group_, modulus, std::move(t));
}

Cocycle2 Cocycle2::operator*(const Cocycle2& other) const {
  require_same_group(*this, other);
  const std::uint32_t m = std::lcm(modulus_, other.modulus_);
  Cocycle2 a = lifted(m), b = other.lifted(m);
  for (std::size_t i = 0; i < a.table_.size(); ++i) a.table_[i] = (a.table_[i] + b.table_[i]) % m;
  return a;
}

Cocycle2 Cocycle2::inverse() const {
  std::vector<std::uint32_t> t(table_);
  for (auto& e : t) e = mod_sub(0, e, modulus_);
  return Cocycle2(group_, modulus_, std::move(t));
}

Cocycle2 Cocycle2::pullback(SubgroupPtr domain, const std::vector<std::size_t>& map) const {
  const std::size_t n = domain->order();
  if (map.size() != n) throw DomainError("pullback map has the wrong size");
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = exponent(map[x], map[y]);
  return Cocycle2(std::move(domain), modulus_, std::move(t));
}

Cocycle2 Cocycle2::restrict_to(SubgroupPtr sub) const {
  if (!sub->is_subgroup_of(*group_)) throw DomainError("restriction to a non-subgroup");
  std::vector<std::size_t> map(sub->order());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = group_->local_of(sub->at(i));
  return pullback(std::move(sub), map);
}

Cocycle2 Cocycle2::conjugated(SubgroupPtr domain, Elem c) const {
  const FiniteGroup& G = domain->parent();
  std::vector<std::size_t> map(domain->order());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = group_->local_of(G.conj(c, domain->at(i)));
  return pullback(std::move(domain), map);
}

Cocycle2 coboundary(const ScalarFunction& phi) {
  const Subgroup& h = *phi.group;
  const std::size_t n = h.order();
  if (phi.values[0] % phi.modulus != 0) throw DomainError("coboundary of a non-normalized function");
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a * n + b] = mod_sub((phi.values[a] + phi.values[b]) % phi.modulus, phi.values[h.local_mul(a, b)], phi.modulus);
  return Cocycle2(phi.group, phi.modulus, std::move(t));
}

std::optional<ScalarFunction> cohomologous(const Cocycle2& a, const Cocycle2& b) {
  require_same_group(a, b);
  const Cocycle2 quotient = b * a.inverse();
  auto solutions = solve_coboundary(a.group(), quotient.modulus(), quotient.table(), false);
  if (solutions.empty()) return std::nullopt;
  return std::move(solutions.front());
}

ScalarFunction phi_g(const Cocycle2& omega, std::size_t g) {
  const Subgroup& h = *omega.group();
  const std::size_t n = h.order();
  const std::uint32_t m = omega.modulus();
  ScalarFunction phi = ScalarFunction::zero(omega.group(), m);
  const std::size_t g_inv = h.local_inv(g);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t conj = h.local_mul(h.local_mul(g, x), g_inv);
    phi.values[x] = mod_sub(omega.exponent(conj, g), omega.exponent(g, x), m);
  }
  // Omega∘Ad g == (d phi_g) Omega
  const Cocycle2 rhs = coboundary(phi) * omega;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t cx = h.local_mul(h.local_mul(g, x), g_inv);
      const std::size_t cy = h.local_mul(h.local_mul(g, y), g_inv);
      if (omega.exponent(cx, cy) != rhs.exponent(x, y))
        throw InvariantViolation("Omega∘Ad g != (d phi_g) Omega; input is not a cocycle");
    }
  return phi;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> torus_coordinates(const Subgroup& group, Elem a, Elem b,
                                                                       std::uint32_t n) {
  const FiniteGroup& G = group.parent();
  if (group.order() != static_cast<std::size_t>(n) * n) throw DomainError("group is not of order N^2");
  if (G.mul(a, b) != G.mul(b, a)) throw DomainError("torus generators do not commute");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> coords(group.order());
  std::vector<bool> seen(group.order(), false);
  Elem ax = FiniteGroup::identity();
  for (std::uint32_t x = 0; x < n; ++x) {
    Elem cur = ax;
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::size_t local = group.local_of(cur);
      if (seen[local]) throw DomainError("generators do not give coordinates on (Z/N)^2");
      seen[local] = true;
      coords[local] = {x, y};
      cur = G.mul(cur, b);
    }
    ax = G.mul(ax, a);
  }
  return coords;
}

namespace {

Cocycle2 bilinear_cocycle(SubgroupPtr group, Elem a, Elem b, std::uint32_t n, std::uint32_t k, bool antisymmetric) {
  if (n < 2 || k >= n) throw DomainError("heisenberg cocycle needs N >= 2 and 0 <= k < N");
  const auto coords = torus_coordinates(*group, a, b, n);
  const std::size_t size = group->order();
  std::vector<std::uint32_t> t(size * size);
  for (std::size_t g = 0; g < size; ++g)
    for (std::size_t h = 0; h < size; ++h) {
      const auto [x, y] = coords[g];
      const auto [x2, y2] = coords[h];
      std::uint64_t e = static_cast<std::uint64_t>(k) * x * y2;
      if (antisymmetric) e += static_cast<std::uint64_t>(n - k % n) * y * x2;
      t[g * size + h] = static_cast<std::uint32_t>(e % n);
    }
  return Cocycle2::from_table(std::move(group), n, std::move(t));
}

}  // namespace

Cocycle2 heisenberg_cocycle(SubgroupPtr group, Elem a, Elem b, std::uint32_t n, std::uint32_t k) {
  return bilinear_cocycle(std::move(group), a, b, n, k, false);
}

Cocycle2 antisymmetric_cocycle(SubgroupPtr group, Elem a, Elem b, std::uint32_t n, std::uint32_t k) {
  return bilinear_cocycle(std::move(group), a, b, n, k, true);
}

std::vector<ScalarFunction> homomorphisms_to_cyclic(SubgroupPtr group, std::uint32_t modulus) {
  const std::size_t n = group->order();
  return solve_coboundary(group, modulus, std::vector<std::uint32_t>(n * n, 0), true);
}

}  // namespace heckefuse
