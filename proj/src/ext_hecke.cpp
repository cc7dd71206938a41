#include "heckefuse/ext_hecke.hpp"

#include <algorithm>
#include <set>

#include "heckefuse/errors.hpp"

namespace heckefuse {

namespace {

std::string describe(const ExtHeckePair& pair, const ExtHeckeElement& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [k, m] : x.terms) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += pair.format_key(k);
  }
  return out;
}

}  // namespace

ExtHeckePair::ExtHeckePair(std::shared_ptr<const DoubleCosetSystem> system, std::uint64_t seed)
    : system_(std::move(system)), hecke_(system_) {
  const DoubleCosetSystem& sys = *system_;
  const FiniteGroup& G = *sys.group();
  const auto& right = sys.right_cosets();

  for (std::uint32_t l = 0; l < sys.size(); ++l) {
    const SubgroupPtr& gg = sys[l].gamma_g;
    irreps_.push_back(irreps(gg, Cocycle2::trivial(gg), seed));
    for (std::uint32_t i = 0; i < irreps_.back().size(); ++i) basis_.push_back({l, i});

    std::vector<Orbit> orbits;
    std::vector<bool> seen(right.size(), false);
    for (std::size_t c = 0; c < right.size(); ++c) {
      if (seen[c]) continue;
      Orbit orbit;
      for (Elem x : gg->elements()) {
        const std::size_t d = sys.right_coset_index(G.mul(right[c], x));
        if (!seen[d]) {
          seen[d] = true;
          orbit.cosets.push_back(d);
        }
      }
      std::sort(orbit.cosets.begin(), orbit.cosets.end());
      orbits.push_back(std::move(orbit));
    }
    orbits_.push_back(std::move(orbits));
  }
  for (Elem h : right) gamma_h_.push_back(gamma_g(*sys.gamma(), h));
}

std::size_t ExtHeckePair::basis_index(BasisKey key) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), key);
  if (it == basis_.end() || *it != key) throw DomainError("not a basis element: " + format_key(key));
  return static_cast<std::size_t>(it - basis_.begin());
}

std::string ExtHeckePair::format_key(BasisKey key) const {
  return "[" + system_->name(key.label) + ":" + std::to_string(key.irrep) + "]";
}

ExtHeckeElement ExtHeckePair::from_rep(const ProjRep& pi) const { return from_rep_at(0, pi); }

ExtHeckeElement ExtHeckePair::from_rep_at(std::uint32_t label, const ProjRep& pi) const {
  const auto mult = multiplicities(pi, irreps_.at(label));
  ExtHeckeElement out;
  for (std::uint32_t i = 0; i < mult.size(); ++i)
    if (mult[i]) out.terms.emplace(BasisKey{label, i}, mult[i]);
  return out;
}

HeckeElement<FiniteHecke> ExtHeckePair::to_hecke(const ExtHeckeElement& x) const {
  HeckeElement<FiniteHecke> out;
  for (const auto& [k, m] : x.terms) out.terms[k.label] += Integer(m) * irreps_[k.label][k.irrep].cls.dim;
  return out;
}

ProjRep ExtHeckePair::transport_rep(const ProjRep& xi, Elem h, std::mt19937_64* rng) const {
  const std::uint32_t l = system_->label(h);
  if (!(*xi.group() == *(*system_)[l].gamma_g)) throw DomainError("representation does not live on Gamma_g0 of h's double coset");
  const auto [g1, g2] = system_->decompose(h, rng);
  return conjugate_by(xi, gamma_g(*system_->gamma(), h), g2);
}

Elem ExtHeckePair::random_in_coset(std::size_t coset, std::mt19937_64& rng) const {
  const Subgroup& gamma = *system_->gamma();
  std::uniform_int_distribution<std::size_t> pick(0, gamma.order() - 1);
  return system_->group()->mul(gamma.at(pick(rng)), system_->right_cosets()[coset]);
}

ExtHeckeElement ExtHeckePair::term(std::uint32_t label, Elem h, BasisKey x, BasisKey y, std::mt19937_64* rng) const {
  const DoubleCosetSystem& sys = *system_;
  const FiniteGroup& G = *sys.group();
  const Elem g0 = sys[label].representative;
  const Elem k = G.mul(g0, G.inv(h));
  if (sys.label(h) != y.label || sys.label(k) != x.label) return {};

  const SubgroupPtr& gg = sys[label].gamma_g;
  const SubgroupPtr s = intersect(*gg, *gamma_h_[sys.right_coset_index(h)]);
  const auto [gamma1, gamma2] = sys.decompose(k, rng);
  const auto [delta1, delta2] = sys.decompose(h, rng);
  // x -> xi(gamma2 h x h^-1 gamma2^-1) ⊗ eta(delta2 x delta2^-1)
  const ProjRep rho = tensor(conjugate_by(rep(x), s, G.mul(gamma2, h)), conjugate_by(rep(y), s, delta2));
  return from_rep_at(label, induce(rho, gg, Cocycle2::trivial(gg)));
}

ExtHeckeElement ExtHeckePair::fuse_basis(BasisKey x, BasisKey y, std::mt19937_64* rng) const {
  const auto& right = system_->right_cosets();
  ExtHeckeElement out;
  for (std::uint32_t l = 0; l < system_->size(); ++l) {
    for (const Orbit& orbit : orbits_[l]) {
      Elem h = right[orbit.cosets.front()];
      if (rng != nullptr) {
        std::uniform_int_distribution<std::size_t> pick(0, orbit.cosets.size() - 1);
        h = random_in_coset(orbit.cosets[pick(*rng)], *rng);
      }
      out += term(l, h, x, y, rng);
    }
  }
  return out;
}

ExtHeckeElement ExtHeckePair::fuse(const ExtHeckeElement& x, const ExtHeckeElement& y, std::mt19937_64* rng) const {
  ExtHeckeElement out;
  for (const auto& [a, ma] : x.terms)
    for (const auto& [b, mb] : y.terms) out += fuse_basis(a, b, rng).scaled(ma * mb);
  return out;
}

void ExtHeckePair::overcount_check(BasisKey x, BasisKey y) const {
  const auto& right = system_->right_cosets();
  ExtHeckeElement total;
  for (std::uint32_t l = 0; l < system_->size(); ++l) {
    const std::size_t order_g = (*system_)[l].gamma_g->order();
    for (const Orbit& orbit : orbits_[l]) {
      const Elem h = right[orbit.cosets.front()];
      const std::size_t index = order_g / intersect(*(*system_)[l].gamma_g, *gamma_h_[orbit.cosets.front()])->order();
      if (orbit.cosets.size() != index)
        throw InvariantViolation("orbit of right coset " + std::to_string(orbit.cosets.front()) + " has size " +
                                 std::to_string(orbit.cosets.size()) + ", expected index " + std::to_string(index));
      const ExtHeckeElement representative = term(l, h, x, y, nullptr);
      ExtHeckeElement orbit_sum;
      for (std::size_t c : orbit.cosets) orbit_sum += term(l, right[c], x, y, nullptr);
      for (auto& [key, m] : orbit_sum.terms) {
        if (m % index != 0)
          throw InvariantViolation("multiplicity " + std::to_string(m) + " of " + format_key(key) +
                                   " over the orbit of right coset " + std::to_string(orbit.cosets.front()) +
                                   " is not divisible by " + std::to_string(index));
        m /= index;
      }
      if (!(orbit_sum == representative))
        throw InvariantViolation("orbit of right coset " + std::to_string(orbit.cosets.front()) +
                                 " contributes unevenly: " + describe(*this, orbit_sum) + " vs " +
                                 describe(*this, representative));
      total += orbit_sum;
    }
  }
  const ExtHeckeElement direct = fuse_basis(x, y);
  if (!(total == direct))
    throw InvariantViolation("sum over all right cosets " + describe(*this, total) + " differs from " +
                             describe(*this, direct) + " for " + format_key(x) + " * " + format_key(y));
}

ExtHeckeElement ExtHeckePair::triple_fuse_basis(BasisKey x, BasisKey y, BasisKey z) const {
  const DoubleCosetSystem& sys = *system_;
  const FiniteGroup& G = *sys.group();
  const auto& right = sys.right_cosets();
  const std::size_t n = right.size();
  ExtHeckeElement out;
  for (std::uint32_t l = 0; l < sys.size(); ++l) {
    const Elem g0 = sys[l].representative;
    const SubgroupPtr& gg = sys[l].gamma_g;
    std::vector<bool> seen(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (seen[i * n + j]) continue;
        for (Elem a : gg->elements())
          seen[sys.right_coset_index(G.mul(right[i], a)) * n + sys.right_coset_index(G.mul(right[j], a))] = true;
        const Elem h = right[i], k = right[j];
        const Elem gh = G.mul(g0, G.inv(h)), hk = G.mul(h, G.inv(k));
        if (sys.label(gh) != x.label || sys.label(hk) != y.label || sys.label(k) != z.label) continue;
        const SubgroupPtr s = intersect(*intersect(*gg, *gamma_h_[i]), *gamma_h_[j]);
        const Elem c1 = G.mul(sys.decompose(gh).second, h);
        const Elem c2 = G.mul(sys.decompose(hk).second, k);
        const Elem c3 = sys.decompose(k).second;
        const ProjRep rho =
            tensor(tensor(conjugate_by(rep(x), s, c1), conjugate_by(rep(y), s, c2)), conjugate_by(rep(z), s, c3));
        out += from_rep_at(l, induce(rho, gg, Cocycle2::trivial(gg)));
      }
  }
  return out;
}

ExtHeckeElement ExtHeckePair::triple_fuse(const ExtHeckeElement& x, const ExtHeckeElement& y,
                                          const ExtHeckeElement& z) const {
  ExtHeckeElement out;
  for (const auto& [a, ma] : x.terms)
    for (const auto& [b, mb] : y.terms)
      for (const auto& [c, mc] : z.terms) out += triple_fuse_basis(a, b, c).scaled(ma * mb * mc);
  return out;
}

ExtHeckeElement ExtHeckePair::conjugate(const ExtHeckeElement& x) const {
  const DoubleCosetSystem& sys = *system_;
  const FiniteGroup& G = *sys.group();
  ExtHeckeElement out;
  for (const auto& [key, m] : x.terms) {
    const std::uint32_t target = hecke_.inverse_label(key.label);
    const Elem g = sys[target].representative;
    const Elem g_inv = G.inv(g);  // lies in the double coset of key.label
    const SubgroupPtr& gg = sys[target].gamma_g;
    // x -> conj(xi_{g^-1}(g x g^-1)) with xi_{g^-1} = xi_{g_a} ∘ Ad gamma2
    const Elem c = G.mul(sys.decompose(g_inv).second, g);
    out += from_rep_at(target, heckefuse::conjugate(conjugate_by(rep(key), gg, c))).scaled(m);
  }
  return out;
}

std::pair<Rational, Rational> ExtHeckePair::dims(const ExtHeckeElement& x) const {
  Rational left = 0, right = 0;
  for (const auto& [key, m] : x.terms) {
    const Integer d = Integer(m) * irreps_[key.label][key.irrep].cls.dim;
    left += Rational(hecke_.left_count(key.label) * d);
    right += Rational(hecke_.right_count(key.label) * d);
  }
  return {left, right};
}

void ExtHeckePair::crossed_dim_check() const {
  const DoubleCosetSystem& sys = *system_;
  const std::size_t lhs = sys.right_cosets().size() * sys.gamma()->order();
  std::size_t rhs = 0;
  for (const auto& dc : sys.cosets()) rhs += dc.right_coset_reps.size() * dc.right_coset_reps.size() * dc.gamma_g->order();
  if (lhs != rhs)
    throw InvariantViolation("crossed-product dimension identity fails: " + std::to_string(lhs) +
                             " != " + std::to_string(rhs));
}

}  // namespace heckefuse
