#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "heckefuse/cocycle.hpp"
#include "heckefuse/group.hpp"

namespace heckefuse {

inline constexpr std::size_t kDefaultSymDegreeCap = 8;

/// A permutation group acting on its points {0, ..., degree-1}: g.i = g(i).
struct GroupAction {
  GroupPtr group;
  std::size_t points() const { return group->degree(); }
  Point act(Elem g, Point i) const { return group->element(g)(i); }
};

/// Orbits, point stabilizers and fixed-point sets.  Only raw data: whether an
/// action satisfies the conditions on infinite index sets has no
/// finite analogue and is not decided here.
struct ActionData {
  std::vector<std::vector<Point>> orbits;
  std::vector<SubgroupPtr> stabilizers;     // per point
  std::vector<std::vector<Point>> fixed;    // per group element
};

ActionData action_diag(const GroupAction& action);

/// {sigma in Sym(n) : sigma Gamma sigma^-1 = Gamma} as a group of degree n.
/// Throws CapExceeded for degree above `degree_cap`.  Parallel scan over
/// Sym(n); the serial variant is the reference implementation.
GroupPtr normalizer_in_sym(const FiniteGroup& gamma, std::size_t degree_cap = kDefaultSymDegreeCap,
                           std::size_t order_cap = kDefaultOrderCap);
GroupPtr normalizer_in_sym_serial(const FiniteGroup& gamma, std::size_t degree_cap = kDefaultSymDegreeCap,
                                  std::size_t order_cap = kDefaultOrderCap);

/// The k-th permutation of {0..n-1} in lexicographic order.
Perm unrank_permutation(std::size_t n, std::uint64_t k);

/// Every subgroup of `group`, ordered by (order, sorted element list).
std::vector<SubgroupPtr> all_subgroups(const Subgroup& group);

/// A group-level commensuration of two actions: eta(g.i) = delta(g).eta(i)
/// for all g in gamma1.  In the finite model every subgroup counts as finite
/// index.
struct Commensuration {
  Perm eta;                   // I -> J
  SubgroupPtr gamma1;         // subgroup of A's group
  SubgroupPtr lambda1;        // delta(gamma1), subgroup of B's group
  std::vector<Elem> delta;    // delta(gamma1->at(i)) as an element of B's group
};

/// All triples (eta, Gamma1, delta) for actions on the same number of points
/// (at most `point_cap`), ordered by eta then by Gamma1.
std::vector<Commensuration> commensurations_of_actions(const GroupAction& a, const GroupAction& b,
                                                       std::size_t point_cap = 6);

/// Invariant factors d1 | d2 | ... of a finite abelian group given the
/// orders of all of its elements.
std::vector<std::uint64_t> abelian_invariants(const std::vector<std::uint64_t>& element_orders);

/// The group part of the outer automorphism description for Gamma acting on
/// its points: Char Gamma with the action of N(Gamma)/Gamma by
/// omega.g = omega∘Ad g.  The measure-space factor is symbolic only.
struct OutDescription {
  GroupPtr normalizer;
  SubgroupPtr gamma;                          // Gamma inside the normalizer
  std::uint32_t exponent = 1;                 // characters take values in Z/exponent
  std::vector<ScalarFunction> characters;     // Char Gamma, exact
  std::vector<std::uint64_t> char_invariants;
  std::vector<Elem> quotient_reps;            // lexicographic minimum of each coset g Gamma
  bool quotient_abelian = true;
  std::vector<std::uint64_t> quotient_invariants;  // only when abelian
  std::vector<std::vector<std::size_t>> action;    // action[q][chi] = index of chi∘Ad q
  std::vector<bool> acts_by_inversion;             // per quotient element
  std::string symbolic_factor = "Aut(X0,mu0)";
};

OutDescription out_description(const FiniteGroup& gamma, std::size_t degree_cap = kDefaultSymDegreeCap);

}  // namespace heckefuse
