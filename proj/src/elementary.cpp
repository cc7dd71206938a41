#include "heckefuse/elementary.hpp"

#include <exception>
#include <string>

#include "heckefuse/errors.hpp"

namespace heckefuse {

namespace {

/// x -> f(c x c^-1) on `domain`; f lives on a subgroup containing c domain c^-1.
ScalarFunction scalar_along(const ScalarFunction& f, SubgroupPtr domain, Elem c) {
  const FiniteGroup& G = domain->parent();
  ScalarFunction out = ScalarFunction::zero(domain, f.modulus);
  for (std::size_t x = 0; x < domain->order(); ++x) out.values[x] = f(f.group->local_of(G.conj(c, domain->at(x))));
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Cocycle2& a, const Cocycle2& b) {
  const std::size_t n = a.size();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (std::abs(a.value(g, h) - b.value(g, h)) > 1e-12) return std::make_pair(g, h);
  return std::nullopt;
}

}  // namespace

ElementaryCalculus::ElementaryCalculus(std::shared_ptr<const DoubleCosetSystem> system, Cocycle2 omega,
                                       std::uint64_t seed)
    : system_(std::move(system)), omega_(std::move(omega)) {
  if (!(*omega_.group() == *system_->gamma())) throw DomainError("the ambient cocycle must live on Gamma");
  for (std::uint32_t l = 0; l < system_->size(); ++l) {
    const Elem d0 = (*system_)[l].representative;
    irreps_.push_back(irreps(rig(d0), required_cocycle(d0), seed));
    for (std::uint32_t i = 0; i < irreps_.back().size(); ++i) basis_.push_back({l, i});
  }
}

SubgroupPtr ElementaryCalculus::rig(Elem delta) const { return lef_rig(*system_->gamma(), delta).rig; }
SubgroupPtr ElementaryCalculus::lef(Elem delta) const { return lef_rig(*system_->gamma(), delta).lef; }

Cocycle2 ElementaryCalculus::required_cocycle(Elem delta) const {
  const SubgroupPtr r = rig(delta);
  return omega_.conjugated(r, delta) * omega_.restrict_to(r).inverse();
}

ElementaryBimodule ElementaryCalculus::make(Elem delta, ProjRep pi) const {
  const SubgroupPtr r = rig(delta);
  if (!(*pi.group() == *r)) throw DomainError("pi must be a representation of rig(Delta)");
  const Cocycle2 required = required_cocycle(delta);
  if (auto diff = first_difference(pi.cocycle(), required))
    throw DomainError("cocycle constraint Omega_pi Omega = Omega o Ad Delta fails at (" +
                      std::to_string(diff->first) + ", " + std::to_string(diff->second) + ")");
  return {delta, std::move(pi)};
}

std::optional<ProjRep> ElementaryCalculus::admissible_scalar(Elem delta) const {
  const Cocycle2 required = required_cocycle(delta);
  auto phi = cohomologous(Cocycle2::trivial(required.group(), required.modulus()), required);
  if (!phi) return std::nullopt;
  return ProjRep::scalar(*phi);
}

ElementaryBimodule ElementaryCalculus::basis_object(BasisKey key) const {
  return {(*system_)[key.label].representative, irreps_.at(key.label).at(key.irrep).rep};
}

std::string ElementaryCalculus::format_key(BasisKey key) const {
  return "H(" + system_->group()->element((*system_)[key.label].representative).to_cycles() + "," +
         std::to_string(key.irrep) + ")";
}

std::vector<ElementaryBimodule> ElementaryCalculus::fuse(const ElementaryBimodule& a, const ElementaryBimodule& b,
                                                         std::mt19937_64* rng) const {
  const Subgroup& gamma = *system_->gamma();
  const FiniteGroup& G = *system_->group();
  const SubgroupPtr rig_a = rig(a.delta);
  const SubgroupPtr lef_b = lef(b.delta);
  const SubgroupPtr rig_b = rig(b.delta);
  const DoubleCosetPartition part = double_cosets(gamma, *rig_a, *lef_b);

  std::vector<ElementaryBimodule> out;
  for (std::size_t i = 0; i < part.representatives.size(); ++i) {
    Elem g = part.representatives[i];
    if (rng != nullptr) {
      std::uniform_int_distribution<std::size_t> pick(0, part.members[i].size() - 1);
      g = part.members[i][pick(*rng)];
    }
    const Elem d = G.mul(G.mul(a.delta, g), b.delta);
    const SubgroupPtr rig_d = rig(d);
    const SubgroupPtr s = intersect(*rig_d, *rig_b);
    // (phi_g ∘ Ad Delta~)(pi ∘ Ad g Delta~) ⊗ pi~ on rig(D) ∩ rig(Delta~)
    const ScalarFunction twist_fn = scalar_along(phi_g(omega_, gamma.local_of(g)), s, b.delta);
    const ProjRep rho =
        tensor(twist(conjugate_by(a.pi, s, G.mul(g, b.delta)), twist_fn), restrict_to(b.pi, s));
    const Cocycle2 along = required_cocycle(d);
    if (auto diff = first_difference(along.restrict_to(s), rho.cocycle()))
      throw InvariantViolation("fusion cocycle bookkeeping fails for g = " + G.element(g).to_cycles() + " at (" +
                               std::to_string(diff->first) + ", " + std::to_string(diff->second) + ")");
    out.push_back(make(d, induce(rho, rig_d, along)));
  }
  return out;
}

ProjRep ElementaryCalculus::moved(const ElementaryBimodule& a, Elem g, Elem h) const {
  const Subgroup& gamma = *system_->gamma();
  const FiniteGroup& G = *system_->group();
  const Elem target = G.mul(G.mul(g, a.delta), h);
  const SubgroupPtr r = rig(target);
  ProjRep out = conjugate_by(a.pi, r, h);
  out = twist(out, scalar_along(phi_g(omega_, gamma.local_of(g)), r, G.mul(a.delta, h)));
  out = twist(out, scalar_along(phi_g(omega_, gamma.local_of(h)), r, FiniteGroup::identity()));
  return out;
}

ElementarySum ElementaryCalculus::canonicalize(const ElementaryBimodule& h, std::mt19937_64* rng) const {
  const FiniteGroup& G = *system_->group();
  const std::uint32_t label = system_->label(h.delta);
  const auto [gamma1, gamma2] = system_->decompose(h.delta, rng);
  // Delta0 = gamma1^-1 Delta gamma2^-1
  const ProjRep pi0 = moved(h, G.inv(gamma1), G.inv(gamma2));
  if (auto diff = first_difference(pi0.cocycle(), required_cocycle((*system_)[label].representative)))
    throw InvariantViolation("isomorphism criterion produces the wrong cocycle at (" + std::to_string(diff->first) +
                             ", " + std::to_string(diff->second) + ")");
  const auto mult = multiplicities(pi0, irreps_[label]);
  ElementarySum out;
  for (std::uint32_t i = 0; i < mult.size(); ++i)
    if (mult[i]) out.terms.emplace(BasisKey{label, i}, mult[i]);
  return out;
}

ElementarySum ElementaryCalculus::fuse_basis(BasisKey x, BasisKey y, std::mt19937_64* rng) const {
  const auto summands = fuse(basis_object(x), basis_object(y), rng);
  std::vector<ElementarySum> parts(summands.size());
  if (rng != nullptr) {
    for (std::size_t i = 0; i < summands.size(); ++i) parts[i] = canonicalize(summands[i], rng);
  } else {
    std::vector<std::exception_ptr> errors(summands.size());
#pragma omp parallel for schedule(dynamic) if (summands.size() > 1)
    for (std::size_t i = 0; i < summands.size(); ++i) {
      try {
        parts[i] = canonicalize(summands[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  ElementarySum out;
  for (const auto& p : parts) out += p;
  return out;
}

ElementarySum ElementaryCalculus::fuse(const ElementarySum& x, const ElementarySum& y, std::mt19937_64* rng) const {
  ElementarySum out;
  for (const auto& [a, ma] : x.terms)
    for (const auto& [b, mb] : y.terms) out += fuse_basis(a, b, rng).scaled(ma * mb);
  return out;
}

std::optional<std::pair<Elem, Elem>> ElementaryCalculus::isomorphic(const ElementaryBimodule& a,
                                                                    const ElementaryBimodule& b) const {
  const Subgroup& gamma = *system_->gamma();
  const FiniteGroup& G = *system_->group();
  if (system_->label(a.delta) != system_->label(b.delta)) return std::nullopt;
  for (Elem h : gamma.elements()) {
    // g = Delta~ h^-1 Delta^-1
    const Elem g = G.mul(G.mul(b.delta, G.inv(h)), G.inv(a.delta));
    if (!gamma.contains(g)) continue;
    const ProjRep candidate = moved(a, g, h);
    if (candidate.dim() == b.pi.dim() && candidate.cocycle().same_values(b.pi.cocycle()) &&
        hom_dim(candidate, b.pi) == 1)
      return std::make_pair(g, h);
  }
  return std::nullopt;
}

ElementaryBimodule ElementaryCalculus::direct_sum(const ElementaryBimodule& a, const ElementaryBimodule& b) const {
  if (a.delta != b.delta) throw DomainError("direct sums need equal Delta");
  return make(a.delta, heckefuse::direct_sum(a.pi, b.pi));
}

ExtHeckeElement ElementaryCalculus::to_ext_hecke(const ElementaryBimodule& h, const ExtHeckePair& pair) const {
  if (!omega_.is_trivial()) throw DomainError("no untwisted identification for a nontrivial cocycle");
  const FiniteGroup& G = *system_->group();
  const std::uint32_t label = system_->label(h.delta);
  const auto [gamma1, gamma2] = system_->decompose(h.delta);
  const Elem d0 = (*system_)[label].representative;
  // xi_{Delta0} = xi_Delta ∘ Ad gamma2^-1
  const ProjRep pi0 = conjugate_by(h.pi, rig(d0), G.inv(gamma2));
  const ProjRep untwisted = ProjRep::from_matrices(pair.system()[label].gamma_g, Cocycle2::trivial(pair.system()[label].gamma_g),
                                                   pi0.matrices());
  return pair.from_rep_at(label, untwisted);
}

}  // namespace heckefuse
