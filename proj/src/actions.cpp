#include "heckefuse/actions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <omp.h>

#include "heckefuse/errors.hpp"

namespace heckefuse {

ActionData action_diag(const GroupAction& action) {
  const FiniteGroup& G = *action.group;
  const std::size_t n = action.points();
  ActionData out;

  std::vector<bool> seen(n, false);
  for (Point i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::set<Point> orbit;
    for (Elem g = 0; g < G.order(); ++g) orbit.insert(action.act(g, i));
    for (Point p : orbit) seen[p] = true;
    out.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  for (Point i = 0; i < n; ++i) {
    std::vector<Elem> stab;
    for (Elem g = 0; g < G.order(); ++g)
      if (action.act(g, i) == i) stab.push_back(g);
    out.stabilizers.push_back(std::make_shared<const Subgroup>(action.group, std::move(stab)));
  }
  for (Elem g = 0; g < G.order(); ++g) {
    std::vector<Point> fix;
    for (Point i = 0; i < n; ++i)
      if (action.act(g, i) == i) fix.push_back(i);
    out.fixed.push_back(std::move(fix));
  }
  return out;
}

Perm unrank_permutation(std::size_t n, std::uint64_t k) {
  std::vector<Point> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<Point> images;
  images.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    const std::uint64_t f = fact[i - 1];
    const std::size_t idx = static_cast<std::size_t>(k / f);
    k %= f;
    images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Perm(std::move(images));
}

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

bool normalizes(const FiniteGroup& gamma, const Perm& sigma) {
  const Perm sigma_inv = sigma.inverse();
  for (const Perm& s : gamma.generators())
    if (!gamma.find(sigma * s * sigma_inv)) return false;
  return true;
}

GroupPtr build_normalizer(const FiniteGroup& gamma, std::vector<Perm> found, std::size_t order_cap) {
  if (found.size() > order_cap) throw CapExceeded("group too large: normalizer exceeds order cap");
  auto group = FiniteGroup::from_closed_set(gamma.degree(), {}, std::move(found));
  // Re-create with a small generating set.
  auto whole = Subgroup::whole(group);
  std::vector<Perm> gens;
  for (Elem g : whole->generators()) gens.push_back(group->element(g));
  return FiniteGroup::from_closed_set(gamma.degree(), std::move(gens), group->elements());
}

void check_degree(const FiniteGroup& gamma, std::size_t degree_cap) {
  if (gamma.degree() > degree_cap) throw CapExceeded("degree too large for brute force");
}

}  // namespace

GroupPtr normalizer_in_sym_serial(const FiniteGroup& gamma, std::size_t degree_cap, std::size_t order_cap) {
  check_degree(gamma, degree_cap);
  const std::uint64_t total = factorial(gamma.degree());
  std::vector<Perm> found;
  for (std::uint64_t k = 0; k < total; ++k) {
    Perm sigma = unrank_permutation(gamma.degree(), k);
    if (normalizes(gamma, sigma)) found.push_back(std::move(sigma));
  }
  return build_normalizer(gamma, std::move(found), order_cap);
}

GroupPtr normalizer_in_sym(const FiniteGroup& gamma, std::size_t degree_cap, std::size_t order_cap) {
  check_degree(gamma, degree_cap);
  const std::uint64_t total = factorial(gamma.degree());
  const std::size_t n = gamma.degree();
  std::vector<std::vector<Perm>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(total); ++k) {
      Perm sigma = unrank_permutation(n, static_cast<std::uint64_t>(k));
      if (normalizes(gamma, sigma)) local.push_back(std::move(sigma));
    }
  }
  std::vector<Perm> found;
  for (auto& part : per_thread) std::move(part.begin(), part.end(), std::back_inserter(found));
  return build_normalizer(gamma, std::move(found), order_cap);
}

std::vector<SubgroupPtr> all_subgroups(const Subgroup& group) {
  const GroupPtr& parent = group.parent_ptr();
  std::set<std::vector<Elem>> found;
  std::vector<std::vector<Elem>> cyclic;
  for (Elem g : group.elements()) {
    Elem gen[] = {g};
    auto c = Subgroup::generated(parent, gen);
    std::vector<Elem> els(c->elements().begin(), c->elements().end());
    if (found.insert(els).second) cyclic.push_back(els);
  }
  std::vector<std::vector<Elem>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& a : frontier) {
      for (const auto& c : cyclic) {
        if (std::includes(a.begin(), a.end(), c.begin(), c.end())) continue;
        std::vector<Elem> gens(a);
        gens.insert(gens.end(), c.begin(), c.end());
        auto joined = Subgroup::generated(parent, gens);
        std::vector<Elem> els(joined->elements().begin(), joined->elements().end());
        if (found.insert(els).second) next.push_back(std::move(els));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Elem>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::vector<SubgroupPtr> out;
  for (auto& els : sorted) out.push_back(std::make_shared<const Subgroup>(parent, std::move(els)));
  return out;
}

std::vector<Commensuration> commensurations_of_actions(const GroupAction& a, const GroupAction& b,
                                                       std::size_t point_cap) {
  const std::size_t n = a.points();
  if (b.points() != n) throw DomainError("actions on index sets of different size");
  if (n > point_cap) throw CapExceeded("index set too large for commensuration search");
  const FiniteGroup& gamma = *a.group;
  const FiniteGroup& lambda = *b.group;
  const auto gamma_all = Subgroup::whole(a.group);
  const auto subgroups = all_subgroups(*gamma_all);

  std::vector<Commensuration> out;
  const std::uint64_t total = factorial(n);
  for (std::uint64_t k = 0; k < total; ++k) {
    const Perm eta = unrank_permutation(n, k);
    const Perm eta_inv = eta.inverse();
    // delta(g) = eta g eta^-1 is forced by eta(g.i) = delta(g).eta(i).
    std::vector<std::int64_t> image(gamma.order(), -1);
    for (Elem g = 0; g < gamma.order(); ++g)
      if (auto d = lambda.find(eta * gamma.element(g) * eta_inv)) image[g] = *d;
    for (const auto& sub : subgroups) {
      bool ok = std::all_of(sub->elements().begin(), sub->elements().end(),
                            [&](Elem g) { return image[g] >= 0; });
      if (!ok) continue;
      Commensuration c{eta, sub, nullptr, {}};
      for (Elem g : sub->elements()) c.delta.push_back(static_cast<Elem>(image[g]));
      c.lambda1 = std::make_shared<const Subgroup>(b.group, c.delta);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<std::uint64_t> abelian_invariants(const std::vector<std::uint64_t>& element_orders) {
  const std::uint64_t n = element_orders.size();
  // Prime factorization of the group order.
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) primes.push_back(rest);

  // For each prime, the exponents a_i of the p-primary cyclic factors:
  // #{x : x^{p^j} = 1} = p^{sum_i min(a_i, j)}.
  std::vector<std::vector<std::uint64_t>> prime_powers;  // descending per prime
  for (std::uint64_t p : primes) {
    std::vector<std::uint64_t> log_counts{0};
    std::uint64_t pj = 1;
    while (true) {
      pj *= p;
      std::uint64_t count = 0;
      for (std::uint64_t o : element_orders)
        if (pj % o == 0) ++count;
      std::uint64_t lg = 0;
      for (std::uint64_t c = count; c > 1; c /= p) ++lg;
      log_counts.push_back(lg);
      if (log_counts.back() == log_counts[log_counts.size() - 2]) break;
    }
    // s_j = #{i : a_i >= j}
    std::vector<std::uint64_t> powers;
    for (std::size_t j = 1; j + 1 < log_counts.size(); ++j) {
      const std::uint64_t s_j = log_counts[j] - log_counts[j - 1];
      const std::uint64_t s_next = log_counts[j + 1] - log_counts[j];
      for (std::uint64_t c = 0; c < s_j - s_next; ++c) {
        std::uint64_t q = 1;
        for (std::size_t t = 0; t < j; ++t) q *= p;
        powers.push_back(q);
      }
    }
    std::sort(powers.rbegin(), powers.rend());
    prime_powers.push_back(std::move(powers));
  }
  std::size_t width = 0;
  for (const auto& pp : prime_powers) width = std::max(width, pp.size());
  std::vector<std::uint64_t> invariants(width, 1);
  for (const auto& pp : prime_powers)
    for (std::size_t i = 0; i < pp.size(); ++i) invariants[i] *= pp[i];
  std::reverse(invariants.begin(), invariants.end());
  return invariants;
}

namespace {

std::uint64_t element_order(const FiniteGroup& G, Elem g) {
  std::uint64_t order = 1;
  for (Elem x = g; x != FiniteGroup::identity(); x = G.mul(x, g)) ++order;
  return order;
}

}  // namespace

OutDescription out_description(const FiniteGroup& gamma_in, std::size_t degree_cap) {
  OutDescription out;
  out.normalizer = normalizer_in_sym(gamma_in, degree_cap);
  const FiniteGroup& G = *out.normalizer;
  std::vector<Elem> gamma_elems;
  for (const Perm& p : gamma_in.elements()) gamma_elems.push_back(G.index_of(p));
  out.gamma = std::make_shared<const Subgroup>(out.normalizer, std::move(gamma_elems));
  const Subgroup& gamma = *out.gamma;

  std::uint64_t exponent = 1;
  for (Elem g : gamma.elements()) exponent = std::lcm(exponent, element_order(G, g));
  out.exponent = static_cast<std::uint32_t>(exponent);
  out.characters = homomorphisms_to_cyclic(out.gamma, out.exponent);

  std::vector<std::uint64_t> char_orders;
  for (const auto& chi : out.characters) {
    std::uint64_t g = out.exponent;
    for (auto v : chi.values) g = std::gcd(g, static_cast<std::uint64_t>(v));
    char_orders.push_back(out.exponent / g);
  }
  out.char_invariants = abelian_invariants(char_orders);

  std::vector<bool> covered(G.order(), false);
  for (Elem g = 0; g < G.order(); ++g) {
    if (covered[g]) continue;
    out.quotient_reps.push_back(g);
    for (Elem x : gamma.elements()) covered[G.mul(g, x)] = true;
  }
  auto coset_of = [&](Elem g) {
    for (std::size_t q = 0; q < out.quotient_reps.size(); ++q)
      if (gamma.contains(G.mul(G.inv(out.quotient_reps[q]), g))) return q;
    throw InvariantViolation("element outside every coset");
  };
  std::vector<std::uint64_t> quotient_orders;
  for (Elem q : out.quotient_reps) {
    std::uint64_t order = 1;
    Elem x = q;
    while (!gamma.contains(x)) {
      x = G.mul(x, q);
      ++order;
    }
    quotient_orders.push_back(order);
    for (Elem r : out.quotient_reps)
      if (coset_of(G.mul(q, r)) != coset_of(G.mul(r, q))) out.quotient_abelian = false;
  }
  if (out.quotient_abelian) out.quotient_invariants = abelian_invariants(quotient_orders);

  auto find_char = [&](const std::vector<std::uint32_t>& values) {
    for (std::size_t c = 0; c < out.characters.size(); ++c)
      if (out.characters[c].values == values) return c;
    throw InvariantViolation("omega∘Ad g is not a character");
  };
  const std::uint32_t m = out.exponent;
  for (Elem q : out.quotient_reps) {
    std::vector<std::size_t> perm;
    bool inversion = true;
    for (const auto& chi : out.characters) {
      std::vector<std::uint32_t> values(gamma.order());
      for (std::size_t x = 0; x < gamma.order(); ++x) values[x] = chi.values[gamma.local_of(G.conj(q, gamma.at(x)))];
      const std::size_t image = find_char(values);
      perm.push_back(image);
      for (std::size_t x = 0; x < gamma.order(); ++x)
        if ((values[x] + chi.values[x]) % m != 0) inversion = false;
    }
    out.action.push_back(std::move(perm));
    out.acts_by_inversion.push_back(inversion);
  }
  return out;
}

}  // namespace heckefuse
