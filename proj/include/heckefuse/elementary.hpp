#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "heckefuse/cocycle.hpp"
#include "heckefuse/ext_hecke.hpp"
#include "heckefuse/group.hpp"
#include "heckefuse/projrep.hpp"

namespace heckefuse {

/// H(Delta, pi): Delta in the ambient finite group (every element of a finite
/// G commensurates Gamma) and pi a projective representation of rig(Delta)
/// with Omega_pi Omega = Omega ∘ Ad Delta on rig(Delta).
struct ElementaryBimodule {
  Elem delta;
  ProjRep pi;
};

/// A formal N-combination of irreducible elementary bimodules in canonical
/// form: (label of Gamma Delta Gamma, index into the canonical irreducibles
/// of rig(Delta0) for the required cocycle at the canonical Delta0).
using ElementarySum = ExtHeckeElement;

/// The elementary-bimodule calculus over a finite pair with a cocycle Omega
/// on Gamma.
class ElementaryCalculus {
 public:
  ElementaryCalculus(std::shared_ptr<const DoubleCosetSystem> system, Cocycle2 omega, std::uint64_t seed = 0);

  const DoubleCosetSystem& system() const { return *system_; }
  const std::shared_ptr<const DoubleCosetSystem>& system_ptr() const { return system_; }
  const Cocycle2& omega() const { return omega_; }

  SubgroupPtr rig(Elem delta) const;
  SubgroupPtr lef(Elem delta) const;
  /// (Omega ∘ Ad Delta) Omega-bar on rig(Delta).
  Cocycle2 required_cocycle(Elem delta) const;

  /// Validates the domain and the cocycle constraint; a violation names the
  /// first pair (g, h) of local indices where the tables differ.
  ElementaryBimodule make(Elem delta, ProjRep pi) const;
  /// A one-dimensional admissible representation, found by solving
  /// d phi = required cocycle.
  std::optional<ProjRep> admissible_scalar(Elem delta) const;

  const std::vector<Irrep>& irreps_at(std::uint32_t label) const { return irreps_[label]; }
  const std::vector<BasisKey>& basis() const { return basis_; }
  ElementaryBimodule basis_object(BasisKey key) const;
  std::string format_key(BasisKey key) const;  // "H(<Delta0>,i)"

  /// The summands H(Delta g Delta~, pi_g), g over rig(Delta) \ Gamma / lef(Delta~).
  /// With an rng each g is a random member of its double coset.
  std::vector<ElementaryBimodule> fuse(const ElementaryBimodule& a, const ElementaryBimodule& b,
                                       std::mt19937_64* rng = nullptr) const;
  /// Decomposes pi and moves every irreducible piece to the canonical
  /// representative of Gamma Delta Gamma using the isomorphism criterion.
  ElementarySum canonicalize(const ElementaryBimodule& h, std::mt19937_64* rng = nullptr) const;
  ElementarySum fuse_basis(BasisKey x, BasisKey y, std::mt19937_64* rng = nullptr) const;
  ElementarySum fuse(const ElementarySum& x, const ElementarySum& y, std::mt19937_64* rng = nullptr) const;

  bool is_irreducible(const ElementaryBimodule& h) const { return heckefuse::is_irreducible(h.pi); }
  /// (g, h) in Gamma x Gamma with Delta~ = g Delta h and pi~ equivalent to
  /// (phi_g ∘ Ad(Delta h)) (pi ∘ Ad h) phi_h.
  std::optional<std::pair<Elem, Elem>> isomorphic(const ElementaryBimodule& a, const ElementaryBimodule& b) const;
  /// The representation (phi_g ∘ Ad(Delta h)) (pi ∘ Ad h) phi_h of rig(g Delta h).
  ProjRep moved(const ElementaryBimodule& a, Elem g, Elem h) const;
  ElementaryBimodule direct_sum(const ElementaryBimodule& a, const ElementaryBimodule& b) const;

  /// Only for trivial Omega: the element supported on Gamma Delta Gamma with
  /// value pi at Delta.
  ExtHeckeElement to_ext_hecke(const ElementaryBimodule& h, const ExtHeckePair& pair) const;

 private:
  std::shared_ptr<const DoubleCosetSystem> system_;
  Cocycle2 omega_;
  std::vector<std::vector<Irrep>> irreps_;
  std::vector<BasisKey> basis_;
};

}  // namespace heckefuse
