#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heckefuse/errors.hpp"
#include "heckefuse/group.hpp"

namespace heckefuse {

/// A normalized function phi : H -> mu_m, stored as exponents mod m.
struct ScalarFunction {
  SubgroupPtr group;
  std::uint32_t modulus = 1;
  std::vector<std::uint32_t> values;  // by local index; values[0] == 0

  static ScalarFunction zero(SubgroupPtr group, std::uint32_t modulus);
  std::uint32_t operator()(std::size_t local) const { return values[local]; }
  std::complex<double> value(std::size_t local) const;
};

/// Failure of the 2-cocycle identity at local indices (g, h, k).
class CocycleViolation : public Error {
 public:
  CocycleViolation(std::size_t g, std::size_t h, std::size_t k)
      : Error("cocycle identity fails at (" + std::to_string(g) + ", " + std::to_string(h) + ", " +
              std::to_string(k) + ")"),
        g_(g),
        h_(h),
        k_(k) {}
  std::size_t g() const { return g_; }
  std::size_t h() const { return h_; }
  std::size_t k() const { return k_; }

 private:
  std::size_t g_, h_, k_;
};

/// A normalized scalar 2-cocycle with values in the m-th roots of unity.
///
/// exponent(g, h) = e means Omega(g, h) = exp(2 pi i e / m).  Tables are
/// indexed by local indices of the subgroup.  Construction through
/// from_table validates the cocycle identity and divides out the constant
/// coboundary so that Omega(e, .) = Omega(., e) = 1.
class Cocycle2 {
 public:
  Cocycle2() = default;

  static Cocycle2 trivial(SubgroupPtr group, std::uint32_t modulus = 1);
  /// Throws CocycleViolation with a witness triple.
  static Cocycle2 from_table(SubgroupPtr group, std::uint32_t modulus, std::vector<std::uint32_t> table);

  const SubgroupPtr& group() const { return group_; }
  std::uint32_t modulus() const { return modulus_; }
  std::size_t size() const { return group_->order(); }
  std::uint32_t exponent(std::size_t g, std::size_t h) const { return table_[g * size() + h]; }
  std::complex<double> value(std::size_t g, std::size_t h) const;
  const std::vector<std::uint32_t>& table() const { return table_; }

  bool is_trivial() const;
  /// Same group and the same root of unity in every entry (moduli may differ).
  bool same_values(const Cocycle2& other) const;

  /// Re-expresses the table over a multiple of the current modulus.
  Cocycle2 lifted(std::uint32_t modulus) const;
  Cocycle2 operator*(const Cocycle2& other) const;
  Cocycle2 inverse() const;
  Cocycle2 restrict_to(SubgroupPtr sub) const;
  /// (Omega∘f)(x, y) = Omega(f(x), f(y)), for f given as a map from local
  /// indices of `domain` to local indices of this cocycle's group.
  Cocycle2 pullback(SubgroupPtr domain, const std::vector<std::size_t>& map) const;
  /// Omega∘Ad c on `domain`: (x, y) -> Omega(c x c^-1, c y c^-1).
  Cocycle2 conjugated(SubgroupPtr domain, Elem c) const;

 private:
  Cocycle2(SubgroupPtr group, std::uint32_t modulus, std::vector<std::uint32_t> table)
      : group_(std::move(group)), modulus_(modulus), table_(std::move(table)) {}

  friend Cocycle2 coboundary(const ScalarFunction& phi);

  SubgroupPtr group_;
  std::uint32_t modulus_ = 1;
  std::vector<std::uint32_t> table_;
};

/// Checks the cocycle identity and normalization; returns the first
/// violating triple (local indices) if any.  Normalization failures are
/// reported as (g, 0, 0) or (0, g, 0).
std::optional<CocycleViolation> find_cocycle_violation(const Subgroup& group, std::uint32_t modulus,
                                                       const std::vector<std::uint32_t>& table);

/// Throws CocycleViolation when the stored table is not a normalized cocycle.
void validate(const Cocycle2& omega);

/// (d phi)(g, h) = phi(g) + phi(h) - phi(gh) mod m.
Cocycle2 coboundary(const ScalarFunction& phi);

/// phi with d phi = b * a^-1, or nullopt if a and b are not cohomologous.
/// Throws DomainError when the cocycles live on different groups.
std::optional<ScalarFunction> cohomologous(const Cocycle2& a, const Cocycle2& b);

/// phi_g(h) = Omega(g h g^-1, g) conj(Omega(g, h)) for g in the cocycle's
/// group (local index).  Verifies Omega∘Ad g = (d phi_g) Omega and throws
/// InvariantViolation if the input was not a cocycle.
ScalarFunction phi_g(const Cocycle2& omega, std::size_t g_local);

/// Heisenberg cocycle on a group isomorphic to (Z/N)^2 with commuting
/// generators a, b of order N: exponent k * x * y' for a^x b^y and a^x' b^y'.
/// Its commutator pairing is zeta_N^{k (x y' - y x')}.
Cocycle2 heisenberg_cocycle(SubgroupPtr group, Elem a, Elem b, std::uint32_t n, std::uint32_t k);

/// The literal antisymmetric table k (x y' - y x') mod N.  Cohomologous to
/// heisenberg_cocycle(n, 2k); a coboundary for N = 2.
Cocycle2 antisymmetric_cocycle(SubgroupPtr group, Elem a, Elem b, std::uint32_t n, std::uint32_t k);

/// Coordinates (x, y) of every local element as a^x b^y; throws when the
/// group is not (Z/N)^2 on these generators.
std::vector<std::pair<std::uint32_t, std::uint32_t>> torus_coordinates(const Subgroup& group, Elem a, Elem b,
                                                                       std::uint32_t n);

/// All homomorphisms H -> Z/m, i.e. normalized phi with d phi = 0.
std::vector<ScalarFunction> homomorphisms_to_cyclic(SubgroupPtr group, std::uint32_t modulus);

}  // namespace heckefuse
