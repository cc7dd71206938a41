#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "heckefuse/group.hpp"
#include "heckefuse/hecke.hpp"
#include "heckefuse/projrep.hpp"

namespace heckefuse {

/// (double-coset label, index into the canonical irreducibles of Gamma_g0).
struct BasisKey {
  std::uint32_t label = 0;
  std::uint32_t irrep = 0;

  auto operator<=>(const BasisKey&) const = default;
};

/// A finitely supported element of the extended Hecke fusion algebra: for each
/// double coset, a representation of Gamma_g0 (g0 the canonical
/// representative), stored as multiplicities of irreducibles.
struct ExtHeckeElement {
  std::map<BasisKey, std::uint64_t> terms;

  static ExtHeckeElement basis(BasisKey key, std::uint64_t mult = 1) {
    ExtHeckeElement x;
    if (mult) x.terms.emplace(key, mult);
    return x;
  }
  bool operator==(const ExtHeckeElement&) const = default;
  bool empty() const { return terms.empty(); }
  ExtHeckeElement& operator+=(const ExtHeckeElement& o) {
    for (const auto& [k, m] : o.terms) terms[k] += m;
    return *this;
  }
  friend ExtHeckeElement operator+(ExtHeckeElement a, const ExtHeckeElement& b) { return a += b; }
  ExtHeckeElement scaled(std::uint64_t k) const {
    ExtHeckeElement x;
    if (k)
      for (const auto& [key, m] : terms) x.terms.emplace(key, m * k);
    return x;
  }
};

/// The untwisted extended Hecke fusion algebra of a finite pair Gamma < G.
///
/// Every double coset keeps the canonical irreducibles of Gamma_g0, fixed at
/// construction; values at other points of the double coset are obtained by
/// transport.  Immutable after construction, so products can be evaluated
/// concurrently.
class ExtHeckePair {
 public:
  explicit ExtHeckePair(std::shared_ptr<const DoubleCosetSystem> system, std::uint64_t seed = 0);

  const DoubleCosetSystem& system() const { return *system_; }
  const FiniteHecke& hecke() const { return hecke_; }
  const Subgroup& gamma() const { return *system_->gamma(); }

  const std::vector<Irrep>& irreps_at(std::uint32_t label) const { return irreps_[label]; }
  const ProjRep& rep(BasisKey key) const { return irreps_[key.label][key.irrep].rep; }

  /// All (label, irreducible of Gamma_g0), ordered by label then irreducible.
  const std::vector<BasisKey>& basis() const { return basis_; }
  std::size_t basis_index(BasisKey key) const;
  std::string format_key(BasisKey key) const;  // "[K:1]"

  ExtHeckeElement unit() const { return ExtHeckeElement::basis({0, 0}); }
  /// Places pi (a representation of Gamma) at the unit double coset.
  ExtHeckeElement from_rep(const ProjRep& pi) const;
  /// Decomposes a representation of Gamma_g0 into the canonical irreducibles.
  ExtHeckeElement from_rep_at(std::uint32_t label, const ProjRep& pi) const;
  HeckeElement<FiniteHecke> to_hecke(const ExtHeckeElement& x) const;

  /// xi_{g0} ∘ Ad gamma2 on Gamma_h, where h = gamma1 g0 gamma2.  With an rng
  /// the decomposition of h is drawn at random.
  ProjRep transport_rep(const ProjRep& xi, Elem h, std::mt19937_64* rng = nullptr) const;

  /// Product of two basis elements, summing over Gamma \ G / Gamma_g for
  /// every output label g.  With an rng, every orbit representative and every
  /// double-coset decomposition is re-drawn at random.
  ExtHeckeElement fuse_basis(BasisKey x, BasisKey y, std::mt19937_64* rng = nullptr) const;
  ExtHeckeElement fuse(const ExtHeckeElement& x, const ExtHeckeElement& y, std::mt19937_64* rng = nullptr) const;

  /// Recomputes x * y as the sum over all of Gamma \ G with the inverse-index
  /// prefactor, checking that every orbit contributes exactly index times its
  /// representative's term.  Throws InvariantViolation with a witness.
  void overcount_check(BasisKey x, BasisKey y) const;

  /// The symmetric triple-product formula, summing over Gamma_g-orbits of
  /// pairs of right cosets.
  ExtHeckeElement triple_fuse_basis(BasisKey x, BasisKey y, BasisKey z) const;
  ExtHeckeElement triple_fuse(const ExtHeckeElement& x, const ExtHeckeElement& y, const ExtHeckeElement& z) const;

  /// xi-bar_g = conjugate of xi_{g^-1} ∘ Ad g.
  ExtHeckeElement conjugate(const ExtHeckeElement& x) const;

  /// (sum [Gamma : Gamma ∩ g Gamma g^-1] dim xi_g, sum [Gamma : Gamma_g] dim xi_g).
  std::pair<Rational, Rational> dims(const ExtHeckeElement& x) const;

  /// |Gamma \ G| |Gamma| = sum over double cosets of R(g)^2 |Gamma_g|.
  /// Throws InvariantViolation when the counts disagree.
  void crossed_dim_check() const;

 private:
  struct Orbit {
    std::vector<std::size_t> cosets;  // indices into system().right_cosets()
  };

  Elem random_in_coset(std::size_t coset, std::mt19937_64& rng) const;
  /// Ind from Gamma_g0 ∩ Gamma_h to Gamma_g0 of (xi_{g0 h^-1} ∘ Ad h) ⊗ eta_h,
  /// decomposed; empty when h does not pair x with y.
  ExtHeckeElement term(std::uint32_t label, Elem h, BasisKey x, BasisKey y, std::mt19937_64* rng) const;

  std::shared_ptr<const DoubleCosetSystem> system_;
  FiniteHecke hecke_;
  std::vector<std::vector<Irrep>> irreps_;
  std::vector<BasisKey> basis_;
  std::vector<std::vector<Orbit>> orbits_;  // per label: Gamma_g0-orbits on Gamma \ G
  std::vector<SubgroupPtr> gamma_h_;        // Gamma_h for each canonical right-coset representative
};

}  // namespace heckefuse
