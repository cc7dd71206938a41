#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "heckefuse/perm.hpp"

namespace heckefuse {

/// Index of an element in a FiniteGroup's canonical element list.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 10'000;

/// A finite permutation group with its full element list.
///
/// Elements are sorted lexicographically on their image tuples, so the
/// identity is always element 0.  Instances are immutable and shared through
/// GroupPtr; everything built on top of a group refers to elements by index.
class FiniteGroup {
 public:
  /// Breadth-first closure of the generators.  Throws CapExceeded when the
  /// generated order exceeds `cap`.
  static std::shared_ptr<const FiniteGroup> closure(std::size_t degree, std::vector<Perm> generators,
                                                    std::size_t cap = kDefaultOrderCap);

  /// Builds a group from an element list that is already closed.
  static std::shared_ptr<const FiniteGroup> from_closed_set(std::size_t degree, std::vector<Perm> generators,
                                                            std::vector<Perm> elements);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(Elem e) const { return elements_[e]; }

  static constexpr Elem identity() { return 0; }

  std::optional<Elem> find(const Perm& p) const;
  /// Like find, but throws DomainError for permutations outside the group.
  Elem index_of(const Perm& p) const;

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inverse_[g]); }

 private:
  FiniteGroup() = default;
  void build_tables();

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<Elem> inverse_;
  std::vector<Elem> table_;  // full multiplication table, only for small orders
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup stored as an explicit sorted set of parent indices.
///
/// The position of an element in `elements()` is its local index; local index
/// 0 is the identity.  Cocycles and representations over a subgroup are
/// indexed by local indices.
class Subgroup {
 public:
  /// Validates closure under products and inverses.
  Subgroup(GroupPtr parent, std::vector<Elem> elements);

  static std::shared_ptr<const Subgroup> whole(GroupPtr parent);
  static std::shared_ptr<const Subgroup> generated(GroupPtr parent, std::span<const Elem> generators);
  static std::shared_ptr<const Subgroup> trivial(GroupPtr parent);

  const FiniteGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  std::size_t order() const { return elements_.size(); }
  std::span<const Elem> elements() const { return elements_; }
  Elem at(std::size_t local) const { return elements_[local]; }

  bool contains(Elem e) const { return local_[e] >= 0; }
  std::optional<std::size_t> local_index(Elem e) const;
  std::size_t local_of(Elem e) const;  // throws DomainError when absent

  std::size_t local_mul(std::size_t a, std::size_t b) const;
  std::size_t local_inv(std::size_t a) const;

  /// A small generating set, chosen greedily in canonical element order.
  const std::vector<Elem>& generators() const { return generators_; }

  /// Local indices of right-coset representatives of `sub` in this group:
  /// the lexicographic minimum of every coset sub*r.
  std::vector<Elem> right_transversal(const Subgroup& sub) const;

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && elements_ == other.elements_;
  }
  bool is_subgroup_of(const Subgroup& other) const;

 private:
  GroupPtr parent_;
  std::vector<Elem> elements_;
  std::vector<std::int32_t> local_;
  std::vector<Elem> generators_;
};

using SubgroupPtr = std::shared_ptr<const Subgroup>;

SubgroupPtr intersect(const Subgroup& a, const Subgroup& b);
/// g H g^-1, for g in the parent group.
SubgroupPtr conjugate_subgroup(const Subgroup& h, Elem g);

/// Gamma_g = Gamma ∩ g^-1 Gamma g.
SubgroupPtr gamma_g(const Subgroup& gamma, Elem g);

struct LefRig {
  SubgroupPtr lef;  // Gamma ∩ Delta Gamma Delta^-1
  SubgroupPtr rig;  // Gamma ∩ Delta^-1 Gamma Delta
};

/// lef and rig of a commensuration.  Verifies that Ad Delta^-1 carries lef
/// onto rig and throws InvariantViolation otherwise.
LefRig lef_rig(const Subgroup& gamma, Elem delta);

/// Double cosets L x R inside a universe U, with L, R ≤ U.
struct DoubleCosetPartition {
  std::vector<Elem> representatives;      // lexicographic minimum of each double coset
  std::vector<std::vector<Elem>> members;  // sorted parent indices
  std::vector<std::uint32_t> label_of;     // per parent element; UINT32_MAX outside U
};

DoubleCosetPartition double_cosets(const Subgroup& universe, const Subgroup& left, const Subgroup& right);

/// One double coset Gamma g0 Gamma of a finite Hecke pair.
struct DoubleCoset {
  Elem representative;                 // lexicographic minimum g0
  std::vector<Elem> members;
  std::vector<Elem> right_coset_reps;  // one per right coset Gamma h ⊂ Gamma g0 Gamma
  std::size_t left_count = 0;          // number of left cosets h Gamma
  SubgroupPtr gamma_g;                 // Gamma ∩ g0^-1 Gamma g0
};

/// The partition Gamma \ G / Gamma with the coset bookkeeping the Hecke
/// layers need.  Right-coset count of a double coset is [Gamma : Gamma_g0];
/// left-coset count is [Gamma : Gamma_{g0^-1}].
class DoubleCosetSystem {
 public:
  DoubleCosetSystem(GroupPtr group, SubgroupPtr gamma);

  const GroupPtr& group() const { return group_; }
  const SubgroupPtr& gamma() const { return gamma_; }
  const SubgroupPtr& whole() const { return whole_; }
  std::size_t size() const { return cosets_.size(); }
  const DoubleCoset& operator[](std::size_t label) const { return cosets_[label]; }
  const std::vector<DoubleCoset>& cosets() const { return cosets_; }

  std::uint32_t label(Elem g) const { return label_of_[g]; }
  /// Canonical representative of the right coset Gamma g.
  Elem right_coset_rep(Elem g) const { return right_rep_[g]; }
  /// Canonical representatives of all right cosets Gamma \ G.
  const std::vector<Elem>& right_cosets() const { return all_right_reps_; }
  std::size_t right_coset_index(Elem g) const { return right_index_[g]; }

  /// Some (gamma1, gamma2) in Gamma x Gamma with h = gamma1 g0 gamma2, where g0 is
  /// the canonical representative of h's double coset.  With an rng, the
  /// decomposition is drawn uniformly from all of them.
  std::pair<Elem, Elem> decompose(Elem h, std::mt19937_64* rng = nullptr) const;

  /// Display name: "e", "K" when there is a single nontrivial double coset,
  /// else "K1", "K2", ... in canonical order.
  std::string name(std::size_t label) const;
  std::optional<std::size_t> find_name(std::string_view name) const;

 private:
  GroupPtr group_;
  SubgroupPtr gamma_;
  SubgroupPtr whole_;
  std::vector<DoubleCoset> cosets_;
  std::vector<std::uint32_t> label_of_;
  std::vector<Elem> right_rep_;
  std::vector<std::size_t> right_index_;
  std::vector<Elem> all_right_reps_;
  std::vector<Elem> gamma2_of_;  // fixed gamma2 with h = gamma1 g0 gamma2
};

}  // namespace heckefuse
