#include "heckefuse/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <string>

#include "heckefuse/errors.hpp"

namespace heckefuse {

namespace {

constexpr std::size_t kTableOrderLimit = 1024;
constexpr std::uint32_t kNoLabel = std::numeric_limits<std::uint32_t>::max();

}  // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::closure(std::size_t degree, std::vector<Perm> generators,
                                                        std::size_t cap) {
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw DomainError("generator degree does not match group degree");
  }
  std::set<Perm> seen;
  std::deque<Perm> queue;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const Perm& s : generators) {
      Perm y = s * x;
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          throw CapExceeded("group too large: order exceeds cap " + std::to_string(cap));
        }
        queue.push_back(std::move(y));
      }
    }
  }
  return from_closed_set(degree, std::move(generators), std::vector<Perm>(seen.begin(), seen.end()));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_closed_set(std::size_t degree, std::vector<Perm> generators,
                                                                std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity()) throw DomainError("element set lacks the identity");
  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;
  group->generators_ = std::move(generators);
  group->elements_ = std::move(elements);
  group->build_tables();
  return group;
}

void FiniteGroup::build_tables() {
  const std::size_t n = elements_.size();
  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) inverse_[i] = index_of(elements_[i].inverse());
  if (n <= kTableOrderLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_of(elements_[a] * elements_[b]);
  }
}

std::optional<Elem> FiniteGroup::find(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<Elem>(it - elements_.begin());
}

Elem FiniteGroup::index_of(const Perm& p) const {
  auto idx = find(p);
  if (!idx) throw DomainError("permutation " + p.to_cycles() + " is not in the group");
  return *idx;
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_of(elements_[a] * elements_[b]);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements) : parent_(std::move(parent)) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elements_ = std::move(elements);
  local_.assign(parent_->order(), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) local_[elements_[i]] = static_cast<std::int32_t>(i);
  if (elements_.empty() || elements_.front() != FiniteGroup::identity())
    throw DomainError("subgroup must contain the identity");
  for (Elem a : elements_) {
    if (!contains(parent_->inv(a))) throw DomainError("subset is not closed under inverses");
    for (Elem b : elements_)
      if (!contains(parent_->mul(a, b))) throw DomainError("subset is not closed under products");
  }

  // Greedy generating set: add the first element not yet generated.
  std::vector<bool> generated(parent_->order(), false);
  generated[FiniteGroup::identity()] = true;
  std::vector<Elem> current{FiniteGroup::identity()};
  for (Elem candidate : elements_) {
    if (generated[candidate]) continue;
    generators_.push_back(candidate);
    std::deque<Elem> queue(current.begin(), current.end());
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (Elem s : generators_) {
        Elem y = parent_->mul(s, x);
        if (!generated[y]) {
          generated[y] = true;
          current.push_back(y);
          queue.push_back(y);
        }
      }
    }
  }
}

SubgroupPtr Subgroup::whole(GroupPtr parent) {
  std::vector<Elem> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return std::make_shared<const Subgroup>(std::move(parent), std::move(all));
}

SubgroupPtr Subgroup::trivial(GroupPtr parent) {
  return std::make_shared<const Subgroup>(std::move(parent), std::vector<Elem>{FiniteGroup::identity()});
}

SubgroupPtr Subgroup::generated(GroupPtr parent, std::span<const Elem> generators) {
  std::vector<bool> seen(parent->order(), false);
  std::vector<Elem> out{FiniteGroup::identity()};
  seen[FiniteGroup::identity()] = true;
  std::deque<Elem> queue{FiniteGroup::identity()};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (Elem s : generators) {
      Elem y = parent->mul(s, x);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return std::make_shared<const Subgroup>(std::move(parent), std::move(out));
}

std::optional<std::size_t> Subgroup::local_index(Elem e) const {
  if (local_[e] < 0) return std::nullopt;
  return static_cast<std::size_t>(local_[e]);
}

std::size_t Subgroup::local_of(Elem e) const {
  if (local_[e] < 0) throw DomainError("element " + parent_->element(e).to_cycles() + " is not in the subgroup");
  return static_cast<std::size_t>(local_[e]);
}

std::size_t Subgroup::local_mul(std::size_t a, std::size_t b) const {
  return static_cast<std::size_t>(local_[parent_->mul(elements_[a], elements_[b])]);
}

std::size_t Subgroup::local_inv(std::size_t a) const {
  return static_cast<std::size_t>(local_[parent_->inv(elements_[a])]);
}

std::vector<Elem> Subgroup::right_transversal(const Subgroup& sub) const {
  if (!sub.is_subgroup_of(*this)) throw DomainError("transversal of a non-subgroup");
  std::vector<bool> covered(elements_.size(), false);
  std::vector<Elem> reps;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (covered[i]) continue;
    reps.push_back(static_cast<Elem>(i));
    for (Elem h : sub.elements()) covered[local_of(parent_->mul(h, elements_[i]))] = true;
  }
  return reps;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](Elem e) { return other.contains(e); });
}

SubgroupPtr intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent_ptr() != b.parent_ptr()) throw DomainError("intersecting subgroups of different groups");
  std::vector<Elem> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return std::make_shared<const Subgroup>(a.parent_ptr(), std::move(out));
}

SubgroupPtr conjugate_subgroup(const Subgroup& h, Elem g) {
  const FiniteGroup& G = h.parent();
  std::vector<Elem> out;
  out.reserve(h.order());
  for (Elem x : h.elements()) out.push_back(G.conj(g, x));
  return std::make_shared<const Subgroup>(h.parent_ptr(), std::move(out));
}

SubgroupPtr gamma_g(const Subgroup& gamma, Elem g) {
  return intersect(gamma, *conjugate_subgroup(gamma, gamma.parent().inv(g)));
}

LefRig lef_rig(const Subgroup& gamma, Elem delta) {
  const FiniteGroup& G = gamma.parent();
  LefRig out{intersect(gamma, *conjugate_subgroup(gamma, delta)),
             intersect(gamma, *conjugate_subgroup(gamma, G.inv(delta)))};
  if (out.lef->order() != out.rig->order()) throw InvariantViolation("lef and rig have different orders");
  const Elem delta_inv = G.inv(delta);
  for (Elem x : out.lef->elements()) {
    if (!out.rig->contains(G.conj(delta_inv, x))) throw InvariantViolation("Ad Delta^-1 does not map lef into rig");
  }
  return out;
}

DoubleCosetPartition double_cosets(const Subgroup& universe, const Subgroup& left, const Subgroup& right) {
  if (!left.is_subgroup_of(universe) || !right.is_subgroup_of(universe))
    throw DomainError("double cosets need subgroups of the universe");
  const FiniteGroup& G = universe.parent();
  DoubleCosetPartition out;
  out.label_of.assign(G.order(), kNoLabel);
  for (Elem g : universe.elements()) {
    if (out.label_of[g] != kNoLabel) continue;
    const auto label = static_cast<std::uint32_t>(out.representatives.size());
    out.representatives.push_back(g);
    std::vector<Elem> members;
    for (Elem a : left.elements()) {
      Elem ag = G.mul(a, g);
      for (Elem b : right.elements()) {
        Elem x = G.mul(ag, b);
        if (out.label_of[x] == kNoLabel) {
          out.label_of[x] = label;
          members.push_back(x);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.members.push_back(std::move(members));
  }
  return out;
}

// ---------------------------------------------------------------------------

DoubleCosetSystem::DoubleCosetSystem(GroupPtr group, SubgroupPtr gamma)
    : group_(std::move(group)), gamma_(std::move(gamma)) {
  if (gamma_->parent_ptr() != group_) throw DomainError("Gamma is not a subgroup of G");
  whole_ = Subgroup::whole(group_);
  const FiniteGroup& G = *group_;
  const std::size_t n = G.order();

  right_rep_.assign(n, 0);
  right_index_.assign(n, 0);
  std::vector<bool> done(n, false);
  for (Elem g = 0; g < n; ++g) {
    if (done[g]) continue;
    for (Elem a : gamma_->elements()) {
      Elem x = G.mul(a, g);
      done[x] = true;
      right_rep_[x] = g;
      right_index_[x] = all_right_reps_.size();
    }
    all_right_reps_.push_back(g);
  }

  DoubleCosetPartition part = double_cosets(*whole_, *gamma_, *gamma_);
  label_of_ = part.label_of;
  gamma2_of_.assign(n, 0);
  for (std::size_t label = 0; label < part.representatives.size(); ++label) {
    DoubleCoset dc;
    dc.representative = part.representatives[label];
    dc.members = std::move(part.members[label]);
    for (Elem r : all_right_reps_)
      if (label_of_[r] == label) dc.right_coset_reps.push_back(r);
    std::set<Elem> left_reps;
    for (Elem x : dc.members) {
      Elem m = x;
      for (Elem a : gamma_->elements()) m = std::min(m, G.mul(x, a));
      left_reps.insert(m);
    }
    dc.left_count = left_reps.size();
    dc.gamma_g = gamma_g(*gamma_, dc.representative);

    const Elem g0_inv = G.inv(dc.representative);
    for (Elem h : dc.members) {
      for (Elem g2 : gamma_->elements()) {
        // gamma1 = h g2^-1 g0^-1 must lie in Gamma
        if (gamma_->contains(G.mul(G.mul(h, G.inv(g2)), g0_inv))) {
          gamma2_of_[h] = g2;
          break;
        }
      }
    }
    cosets_.push_back(std::move(dc));
  }
}

std::pair<Elem, Elem> DoubleCosetSystem::decompose(Elem h, std::mt19937_64* rng) const {
  const FiniteGroup& G = *group_;
  const DoubleCoset& dc = cosets_[label_of_[h]];
  Elem g2 = gamma2_of_[h];
  if (rng != nullptr) {
    // All decompositions differ by x in Gamma_{g0}: gamma2' = x gamma2.
    std::uniform_int_distribution<std::size_t> pick(0, dc.gamma_g->order() - 1);
    g2 = G.mul(dc.gamma_g->at(pick(*rng)), g2);
  }
  Elem g1 = G.mul(G.mul(h, G.inv(g2)), G.inv(dc.representative));
  return {g1, g2};
}

std::string DoubleCosetSystem::name(std::size_t label) const {
  if (label == 0) return "e";
  if (cosets_.size() == 2) return "K";
  return "K" + std::to_string(label);
}

std::optional<std::size_t> DoubleCosetSystem::find_name(std::string_view name) const {
  for (std::size_t i = 0; i < cosets_.size(); ++i)
    if (this->name(i) == name) return i;
  return std::nullopt;
}

}  // namespace heckefuse
