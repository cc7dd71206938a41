#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "heckefuse/cocycle.hpp"
#include "heckefuse/group.hpp"

namespace heckefuse {

using Matrix = Eigen::MatrixXcd;

inline constexpr double kUnitaryTolerance = 1e-8;
inline constexpr double kRankThreshold = 1e-9;
inline constexpr double kIntegralityTolerance = 1e-6;
inline constexpr double kCharacterGrid = 1e-6;

/// A projective unitary representation pi(g) pi(h) = Omega(g, h) pi(gh).
///
/// Matrices are indexed by local indices of the group.  All operations
/// return new values; nothing is shared mutably.
class ProjRep {
 public:
  /// Validates unitarity, pi(e) = 1 and the projective multiplication law.
  static ProjRep from_matrices(SubgroupPtr group, Cocycle2 cocycle, std::vector<Matrix> matrices);
  static ProjRep trivial(SubgroupPtr group, std::size_t dim = 1);
  /// A one-dimensional projective representation g -> zeta^{phi(g)}, with
  /// cocycle d phi.
  static ProjRep scalar(const ScalarFunction& phi);

  const SubgroupPtr& group() const { return group_; }
  const Cocycle2& cocycle() const { return cocycle_; }
  std::size_t dim() const { return dim_; }
  const Matrix& operator()(std::size_t local) const { return matrices_[local]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

  std::vector<std::complex<double>> character() const;

  /// Throws InvariantViolation describing the first failed invariant.
  void validate(double tol = kUnitaryTolerance) const;

 private:
  ProjRep(SubgroupPtr group, Cocycle2 cocycle, std::vector<Matrix> matrices);

  friend ProjRep regular_rep(SubgroupPtr, const Cocycle2&);
  friend ProjRep induce(const ProjRep&, SubgroupPtr, const Cocycle2&);
  friend ProjRep tensor(const ProjRep&, const ProjRep&);
  friend ProjRep conjugate(const ProjRep&);
  friend ProjRep restrict_to(const ProjRep&, SubgroupPtr);
  friend ProjRep twist(const ProjRep&, const ScalarFunction&);
  friend ProjRep transport(const ProjRep&, SubgroupPtr, const std::vector<std::size_t>&);
  friend ProjRep direct_sum(const ProjRep&, const ProjRep&);
  friend ProjRep subrepresentation(const ProjRep&, const Matrix&);

  SubgroupPtr group_;
  Cocycle2 cocycle_;
  std::size_t dim_ = 0;
  std::vector<Matrix> matrices_;
};

/// Equivalence-class fingerprint: the character on the 1e-6 grid.
struct RepClass {
  std::size_t dim = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> character;  // round(re/grid), round(im/grid)

  auto operator<=>(const RepClass&) const = default;
  bool operator==(const RepClass&) const = default;
};

RepClass fingerprint(const ProjRep& rep);

/// Canonical irreducible order: by dimension, then by rounded character in
/// descending lexicographic order (so the trivial representation comes
/// first whenever it exists).
bool canonical_less(const RepClass& a, const RepClass& b);

using RepMultiset = std::map<RepClass, std::uint64_t>;

/// pi(g) e_h = Omega(g, h) e_{gh}.
ProjRep regular_rep(SubgroupPtr group, const Cocycle2& omega);

/// Induction along omega from pi's group to `group`, on the coset model:
/// functions xi with xi(h g) = conj(Omega(h, g)) pi(h) xi(g), acted on by
/// (pi_1(g) xi)(h) = Omega(h, g) xi(h g).  Requires omega restricted to
/// pi's group to equal pi's cocycle.
ProjRep induce(const ProjRep& pi, SubgroupPtr group, const Cocycle2& omega);

ProjRep tensor(const ProjRep& a, const ProjRep& b);
ProjRep conjugate(const ProjRep& pi);
ProjRep restrict_to(const ProjRep& pi, SubgroupPtr sub);
/// g -> zeta^{phi(g)} pi(g); the cocycle becomes (d phi) Omega.
ProjRep twist(const ProjRep& pi, const ScalarFunction& phi);
/// Pulls pi back along `map` (local indices of `domain` -> local indices of
/// pi's group), which must be an injective homomorphism.
ProjRep transport(const ProjRep& pi, SubgroupPtr domain, const std::vector<std::size_t>& map);
/// pi∘Ad c on `domain`: x -> pi(c x c^-1).
ProjRep conjugate_by(const ProjRep& pi, SubgroupPtr domain, Elem c);
ProjRep direct_sum(const ProjRep& a, const ProjRep& b);

/// dim Hom(a, b): rank of the averaging projector
/// X -> |G|^-1 sum_g a(g)^-1 X b(g).  Throws NumericalDegradation when the
/// rank is not clearly integral.
std::size_t hom_dim(const ProjRep& a, const ProjRep& b);

bool is_irreducible(const ProjRep& pi);
bool equivalent(const ProjRep& a, const ProjRep& b);

/// Irreducible constituents (as explicit subrepresentations) by recursive
/// splitting along eigenspaces of random self-adjoint commutant elements.
std::vector<ProjRep> split_irreducibles(const ProjRep& pi, std::uint64_t seed = 0);

RepMultiset decompose(const ProjRep& pi, std::uint64_t seed = 0);

struct Irrep {
  RepClass cls;
  ProjRep rep;
};

/// Complete, duplicate-free, canonically ordered irreducibles for (group, omega).
std::vector<Irrep> irreps(SubgroupPtr group, const Cocycle2& omega, std::uint64_t seed = 0);

/// Multiplicity of each listed irreducible in pi via hom_dim; checks that the
/// dimensions add up to dim(pi).
std::vector<std::uint64_t> multiplicities(const ProjRep& pi, const std::vector<Irrep>& basis);

}  // namespace heckefuse
