#include "heckefuse/checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "heckefuse/actions.hpp"
#include "heckefuse/elementary.hpp"
#include "heckefuse/errors.hpp"
#include "heckefuse/ext_hecke.hpp"
#include "heckefuse/hecke.hpp"
#include "heckefuse/projrep.hpp"
#include "heckefuse/table.hpp"

namespace heckefuse {

namespace {

struct Skip {
  std::string reason;
};

class Suite {
 public:
  void run(const std::string& module, const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.module = module;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = body();
      r.ok = r.detail.empty();
    } catch (const Skip& s) {
      r.skipped = true;
      r.detail = s.reason;
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }

  std::vector<CheckResult> results;
};

std::string cycles(const FiniteGroup& G, Elem g) { return G.element(g).to_cycles(); }

std::string describe(const ExtHeckeElement& x, const std::function<std::string(BasisKey)>& name) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [k, m] : x.terms) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += name(k);
  }
  return out;
}

std::uint64_t mult_of(const ExtHeckeElement& x, BasisKey k) {
  auto it = x.terms.find(k);
  return it == x.terms.end() ? 0 : it->second;
}

/// x * y from a table, x and y arbitrary sums.
ExtHeckeElement table_product(const FusionTable& t, const std::map<BasisKey, std::size_t>& index,
                              const ExtHeckeElement& x, const ExtHeckeElement& y) {
  ExtHeckeElement out;
  for (const auto& [a, ma] : x.terms)
    for (const auto& [b, mb] : y.terms) out += t.product(index.at(a), index.at(b)).scaled(ma * mb);
  return out;
}

std::map<BasisKey, std::size_t> index_of(const FusionTable& t) {
  std::map<BasisKey, std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) out[t.basis[i].key] = i;
  return out;
}

/// Triples (i, j, k) to test: all of them when few enough, a seeded sample otherwise.
std::vector<std::array<std::size_t, 3>> triples(std::size_t n, const CheckOptions& opt, std::uint64_t salt) {
  std::vector<std::array<std::size_t, 3>> out;
  if (n * n * n <= opt.exhaustive_triples) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out.push_back({i, j, k});
    return out;
  }
  std::mt19937_64 rng(opt.seed ^ salt);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < opt.sampled_triples; ++s) out.push_back({pick(rng), pick(rng), pick(rng)});
  return out;
}

GroupPtr subgroup_as_group(const Subgroup& sub) {
  const FiniteGroup& G = sub.parent();
  std::vector<Perm> gens, elems;
  for (Elem g : sub.generators()) gens.push_back(G.element(g));
  for (Elem g : sub.elements()) elems.push_back(G.element(g));
  std::sort(elems.begin(), elems.end());
  return FiniteGroup::from_closed_set(G.degree(), std::move(gens), std::move(elems));
}

ScalarFunction random_scalar(const SubgroupPtr& group, std::uint32_t modulus, std::mt19937_64& rng) {
  ScalarFunction f = ScalarFunction::zero(group, modulus);
  std::uniform_int_distribution<std::uint32_t> pick(0, modulus - 1);
  for (std::size_t i = 1; i < f.values.size(); ++i) f.values[i] = pick(rng);
  return f;
}

ScalarFunction product(const ScalarFunction& a, const ScalarFunction& b) {
  ScalarFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = (a.values[i] + b.values[i]) % a.modulus;
  return out;
}

// ---------------------------------------------------------------------------
// Hecke layer, shared by all backends.
// ---------------------------------------------------------------------------

template <class Backend>
std::string hecke_label_triples(const Backend& backend, const std::vector<std::array<typename Backend::Label, 3>>& ts) {
  using E = HeckeElement<Backend>;
  for (const auto& [a, b, c] : ts) {
    const E x = E::basis(a), y = E::basis(b), z = E::basis(c);
    const E left = convolve(backend, convolve(backend, x, y), z);
    const E right = convolve(backend, x, convolve(backend, y, z));
    if (!(left == right))
      return "(xy)z != x(yz) for x = " + backend.format_label(a) + ", y = " + backend.format_label(b) +
             ", z = " + backend.format_label(c) + ": " + format(backend, left) + " vs " + format(backend, right);
  }
  return {};
}

template <class Backend>
std::string hecke_degree(const Backend& backend, const std::vector<typename Backend::Label>& labels) {
  using E = HeckeElement<Backend>;
  for (const auto& a : labels)
    for (const auto& b : labels) {
      const E p = convolve_basis(backend, a, b);
      const Integer lhs = degree(backend, p), rhs = backend.right_count(a) * backend.right_count(b);
      if (lhs != rhs)
        return "deg(" + backend.format_label(a) + " * " + backend.format_label(b) + ") = " + lhs.str() +
               ", expected " + rhs.str();
      const Integer llhs = left_degree(backend, p), lrhs = backend.left_count(a) * backend.left_count(b);
      if (llhs != lrhs)
        return "left degree of " + backend.format_label(a) + " * " + backend.format_label(b) + " is " + llhs.str() +
               ", expected " + lrhs.str();
    }
  return {};
}

template <class Backend>
std::string hecke_involution(const Backend& backend, const std::vector<typename Backend::Label>& labels) {
  using E = HeckeElement<Backend>;
  for (const auto& a : labels) {
    if (!(backend.inverse_label(backend.inverse_label(a)) == a))
      return "inverse label is not an involution at " + backend.format_label(a);
    for (const auto& b : labels) {
      const E lhs = involution(backend, convolve_basis(backend, a, b));
      const E rhs = convolve_basis(backend, backend.inverse_label(b), backend.inverse_label(a));
      if (!(lhs == rhs))
        return "(xy)* != y* x* for x = " + backend.format_label(a) + ", y = " + backend.format_label(b);
    }
  }
  return {};
}

template <class Backend>
std::string hecke_sigma(const Backend& backend, const std::vector<typename Backend::Label>& labels) {
  for (const auto& a : labels)
    for (const auto& b : labels) sigma_check(backend, a, b);
  return {};
}

// ---------------------------------------------------------------------------
// Finite pairs.
// ---------------------------------------------------------------------------

void perm_core_checks(Suite& s, const FinitePair& fp) {
  const DoubleCosetSystem& sys = *fp.system;
  const FiniteGroup& G = *fp.group;
  const Subgroup& gamma = *fp.gamma;

  s.run("perm-core", "double coset sizes", [&]() -> std::string {
    for (Elem g = 0; g < G.order(); ++g) {
      const auto& dc = sys[sys.label(g)];
      const std::size_t r = gamma.order() / gamma_g(gamma, g)->order();
      const std::size_t l = gamma.order() / gamma_g(gamma, G.inv(g))->order();
      if (dc.members.size() != gamma.order() * r || dc.members.size() != gamma.order() * l)
        return "|Gamma g Gamma| = " + std::to_string(dc.members.size()) + " for g = " + cycles(G, g) +
               ", index of Gamma_g " + std::to_string(r) + ", of Gamma_g^-1 " + std::to_string(l);
    }
    for (std::size_t l = 0; l < sys.size(); ++l)
      if (sys[l].right_coset_reps.size() != sys[l].left_count)
        return "left and right coset counts differ on " + sys.name(l);
    return {};
  });

  s.run("perm-core", "double cosets partition G", [&]() -> std::string {
    std::vector<int> seen(G.order(), 0);
    for (const auto& dc : sys.cosets())
      for (Elem g : dc.members) ++seen[g];
    for (Elem g = 0; g < G.order(); ++g)
      if (seen[g] != 1) return cycles(G, g) + " lies in " + std::to_string(seen[g]) + " double cosets";
    const DoubleCosetSystem again(fp.group, fp.gamma);
    for (std::size_t l = 0; l < sys.size(); ++l)
      if (again[l].representative != sys[l].representative) return "representative of " + sys.name(l) + " moved";
    return {};
  });

  s.run("perm-core", "Ad Delta^-1 maps lef onto rig", [&]() -> std::string {
    for (Elem d = 0; d < G.order(); ++d) {
      const LefRig lr = lef_rig(gamma, d);
      if (lr.lef->order() != lr.rig->order()) return "|lef| != |rig| for Delta = " + cycles(G, d);
      for (Elem x : lr.lef->elements())
        if (!lr.rig->contains(G.conj(G.inv(d), x)))
          return "Delta^-1 x Delta not in rig for Delta = " + cycles(G, d) + ", x = " + cycles(G, x);
    }
    return {};
  });

  s.run("perm-core", "normalizer contains Gamma", [&]() -> std::string {
    if (G.degree() > kDefaultSymDegreeCap) throw Skip{"degree above the symmetric-group scan cap"};
    const GroupPtr g = subgroup_as_group(gamma);
    const GroupPtr n = normalizer_in_sym(*g);
    for (const Perm& p : g->elements())
      if (!n->find(p)) return p.to_cycles() + " in Gamma but not in its normalizer";
    const GroupPtr serial = normalizer_in_sym_serial(*g);
    if (serial->elements() != n->elements()) return "serial and parallel normalizer scans differ";
    return {};
  });

  s.run("perm-core", "commensurations are symmetric", [&]() -> std::string {
    if (G.degree() > 6) throw Skip{"degree above the commensuration search cap"};
    const GroupPtr a = subgroup_as_group(gamma);
    // the last element of G gives a (usually) different conjugate of Gamma
    const Elem c = static_cast<Elem>(G.order() - 1);
    const GroupPtr b = subgroup_as_group(*conjugate_subgroup(gamma, c));
    using Key = std::pair<Perm, std::vector<Perm>>;
    auto keys = [](const GroupAction& x, const GroupAction& y, bool invert) {
      std::set<Key> out;
      for (const auto& cm : commensurations_of_actions(x, y)) {
        std::vector<Perm> dom;
        const auto& sub = invert ? *cm.lambda1 : *cm.gamma1;
        for (Elem e : sub.elements()) dom.push_back(sub.parent().element(e));
        std::sort(dom.begin(), dom.end());
        out.emplace(invert ? cm.eta.inverse() : cm.eta, std::move(dom));
      }
      return out;
    };
    const auto forward = keys({a}, {b}, true);
    const auto backward = keys({b}, {a}, false);
    if (forward != backward)
      return std::to_string(forward.size()) + " inverted commensurations A -> B vs " +
             std::to_string(backward.size()) + " commensurations B -> A";
    return {};
  });

  s.run("perm-core", "Out description", [&]() -> std::string {
    if (G.degree() > kDefaultSymDegreeCap) throw Skip{"degree above the symmetric-group scan cap"};
    const GroupPtr g = subgroup_as_group(gamma);
    const OutDescription out = out_description(*g);
    if (out.quotient_reps.size() * g->order() != out.normalizer->order())
      return "quotient has " + std::to_string(out.quotient_reps.size()) + " elements, expected |N|/|Gamma|";
    std::uint64_t chars = 1;
    for (auto k : out.char_invariants) chars *= k;
    if (chars != out.characters.size()) return "Char invariants disagree with the number of characters";
    for (const auto& chi : out.characters)
      for (std::size_t x = 0; x < chi.values.size(); ++x)
        for (std::size_t y = 0; y < chi.values.size(); ++y)
          if ((chi(x) + chi(y)) % chi.modulus != chi(chi.group->local_mul(x, y)))
            return "a listed character is not a homomorphism";
    return {};
  });
}

void cocycle_checks(Suite& s, const FinitePair& fp, const CheckOptions& opt) {
  const SubgroupPtr& gamma = fp.gamma;
  const Cocycle2& omega = fp.omega;

  s.run("cocycle", "Omega satisfies the cocycle identity", [&]() -> std::string {
    validate(omega);
    return {};
  });

  s.run("cocycle", "Omega o Ad g = (d phi_g) Omega for every g", [&]() -> std::string {
    for (std::size_t g = 0; g < gamma->order(); ++g) {
      const Cocycle2 lhs = omega.conjugated(gamma, gamma->at(g));
      const Cocycle2 rhs = coboundary(phi_g(omega, g)) * omega;
      if (!lhs.same_values(rhs)) return "fails for g = " + cycles(*fp.group, gamma->at(g));
    }
    return {};
  });

  s.run("cocycle", "coboundary is multiplicative", [&]() -> std::string {
    std::mt19937_64 rng(opt.seed + 11);
    for (std::uint32_t m : {2u, 3u, 4u, 6u})
      for (int trial = 0; trial < 10; ++trial) {
        const ScalarFunction a = random_scalar(gamma, m, rng), b = random_scalar(gamma, m, rng);
        if (!coboundary(product(a, b)).same_values(coboundary(a) * coboundary(b)))
          return "d(phi psi) != d phi d psi modulo " + std::to_string(m);
      }
    return {};
  });

  s.run("cocycle", "cohomologous is an equivalence with composable witnesses", [&]() -> std::string {
    std::mt19937_64 rng(opt.seed + 12);
    const std::uint32_t m = std::max<std::uint32_t>(omega.modulus(), 2);
    for (int trial = 0; trial < 10; ++trial) {
      const Cocycle2 a = omega.lifted(m);
      const Cocycle2 b = coboundary(random_scalar(gamma, m, rng)) * a;
      const Cocycle2 c = coboundary(random_scalar(gamma, m, rng)) * b;
      const auto aa = cohomologous(a, a), ab = cohomologous(a, b), ba = cohomologous(b, a), bc = cohomologous(b, c);
      if (!aa || !ab || !ba || !bc) return "missing witness for a cohomologous pair";
      if (!(coboundary(*ab) * a).same_values(b)) return "witness for a ~ b does not satisfy d phi a = b";
      if (!(coboundary(product(*ab, *bc)) * a).same_values(c)) return "composed witnesses do not give a ~ c";
    }
    return {};
  });

  s.run("cocycle", "heisenberg classes are distinct", [&]() -> std::string {
    if (!fp.entry.omega || fp.entry.omega->kind != CocycleSpec::Kind::Heisenberg)
      throw Skip{"pair has no heisenberg cocycle"};
    const std::uint32_t n = fp.entry.omega->n;
    const auto& gens = gamma->generators();
    for (std::uint32_t k = 0; k < n; ++k)
      for (std::uint32_t k2 = 0; k2 < n; ++k2) {
        const bool same = cohomologous(heisenberg_cocycle(gamma, gens[0], gens[1], n, k),
                                       heisenberg_cocycle(gamma, gens[0], gens[1], n, k2))
                              .has_value();
        if (same != (k == k2))
          return "heisenberg " + std::to_string(n) + " " + std::to_string(k) + " vs " + std::to_string(k2) +
                 (same ? " are cohomologous" : " are not cohomologous");
      }
    return {};
  });
}

void projrep_checks(Suite& s, const FinitePair& fp, const CheckOptions& opt) {
  const SubgroupPtr& gamma = fp.gamma;
  const Cocycle2& omega = fp.omega;

  s.run("projrep", "completeness of irreducibles", [&]() -> std::string {
    const auto plain = irreps(gamma, Cocycle2::trivial(gamma), opt.seed);
    std::size_t sum = 0;
    for (const auto& ir : plain) sum += ir.cls.dim * ir.cls.dim;
    if (sum != gamma->order()) return "sum of dim^2 = " + std::to_string(sum) + " != |Gamma|";
    const auto mult = multiplicities(regular_rep(gamma, Cocycle2::trivial(gamma)), plain);
    for (std::size_t i = 0; i < plain.size(); ++i)
      if (mult[i] != plain[i].cls.dim) return "regular representation multiplicity differs from dimension";
    const RepMultiset twisted = decompose(regular_rep(gamma, omega), opt.seed);
    std::size_t total = 0;
    for (const auto& [cls, m] : twisted) total += m * cls.dim;
    if (total != gamma->order()) return "twisted regular representation has total dimension " + std::to_string(total);
    return {};
  });

  s.run("projrep", "Frobenius reciprocity for induction", [&]() -> std::string {
    std::vector<std::pair<SubgroupPtr, SubgroupPtr>> pairs;  // (H, K) with H <= K
    for (const auto& h : all_subgroups(*gamma)) pairs.emplace_back(h, gamma);
    pairs.emplace_back(gamma, fp.system->whole());
    for (const auto& [h, k] : pairs) {
      const Cocycle2 on_k = (k == gamma) ? omega : Cocycle2::trivial(k);
      const Cocycle2 on_h = on_k.restrict_to(h);
      const auto small = irreps(h, on_h, opt.seed);
      const auto big = irreps(k, on_k, opt.seed);
      for (const auto& pi : small) {
        const ProjRep ind = induce(pi.rep, k, on_k);
        for (const auto& rho : big)
          if (hom_dim(ind, rho.rep) != hom_dim(pi.rep, restrict_to(rho.rep, h)))
            return "Hom(Ind pi, rho) != Hom(pi, Res rho) for a subgroup of order " + std::to_string(h->order()) +
                   " in one of order " + std::to_string(k->order());
      }
    }
    return {};
  });

  s.run("projrep", "inner transport is equivalent", [&]() -> std::string {
    const auto plain = irreps(gamma, Cocycle2::trivial(gamma), opt.seed);
    for (const auto& rho : plain)
      for (Elem c : gamma->elements())
        if (fingerprint(conjugate_by(rho.rep, gamma, c)) != rho.cls)
          return "rho o Ad c has a different character for c = " + cycles(*fp.group, c);
    return {};
  });

  s.run("projrep", "character equivalence agrees with hom_dim", [&]() -> std::string {
    for (const auto& sub : {gamma, fp.system->whole()}) {
      const auto list = irreps(sub, sub == gamma ? omega : Cocycle2::trivial(sub), opt.seed);
      for (const auto& a : list)
        for (const auto& b : list)
          if (equivalent(a.rep, b.rep) != (hom_dim(a.rep, b.rep) >= 1))
            return "equivalent() and hom_dim disagree on a group of order " + std::to_string(sub->order());
    }
    return {};
  });
}

void finite_hecke_checks(Suite& s, const FinitePair& fp, const CheckOptions& opt) {
  const FiniteHecke backend(fp.system);
  const auto labels = backend.labels();

  s.run("hecke", "associativity", [&]() -> std::string {
    std::vector<std::array<FiniteHecke::Label, 3>> ts;
    for (const auto& t : triples(labels.size(), opt, 1)) ts.push_back({labels[t[0]], labels[t[1]], labels[t[2]]});
    return hecke_label_triples(backend, ts);
  });
  s.run("hecke", "degree is multiplicative", [&] { return hecke_degree(backend, labels); });
  s.run("hecke", "involution is anti-multiplicative", [&] { return hecke_involution(backend, labels); });
  s.run("hecke", "Frobenius reciprocity of weighted structure constants", [&]() -> std::string {
    // m(x, y; z) = <T_x T_y, T_z> = c_z R(z)
    auto m = [&](FiniteHecke::Label x, FiniteHecke::Label y, FiniteHecke::Label z) -> Integer {
      const auto p = convolve_basis(backend, x, y);
      auto it = p.terms.find(z);
      return it == p.terms.end() ? Integer(0) : it->second * backend.right_count(z);
    };
    for (auto x : labels)
      for (auto y : labels)
        for (auto z : labels) {
          const Integer a = m(x, y, z), b = m(backend.inverse_label(x), z, y), c = m(z, backend.inverse_label(y), x);
          if (a != b || a != c)
            return "m(" + backend.format_label(x) + "," + backend.format_label(y) + ";" + backend.format_label(z) +
                   ") = " + a.str() + ", rotations give " + b.str() + " and " + c.str();
        }
    return {};
  });
  s.run("hecke", "lambda is multiplicative", [&] { return hecke_sigma(backend, labels); });
}

void ext_hecke_checks(Suite& s, const FinitePair& fp, const ExtHeckePair& pair, const FusionTable& table,
                      const CheckOptions& opt) {
  const auto& basis = pair.basis();
  const std::size_t n = basis.size();
  const auto index = index_of(table);
  auto name = [&](BasisKey k) { return pair.format_key(k); };
  using E = ExtHeckeElement;

  s.run("ext-hecke", "unit", [&]() -> std::string {
    for (const auto& k : basis) {
      const E x = E::basis(k);
      if (!(pair.fuse(pair.unit(), x) == x) || !(pair.fuse(x, pair.unit()) == x))
        return "unit does not act trivially on " + name(k);
    }
    return {};
  });

  s.run("ext-hecke", "three-way associativity", [&]() -> std::string {
    for (const auto& [i, j, k] : triples(n, opt, 2)) {
      const E x = E::basis(basis[i]), y = E::basis(basis[j]), z = E::basis(basis[k]);
      const E left = table_product(table, index, table.product(i, j), z);
      const E right = table_product(table, index, x, table.product(j, k));
      const E triple = pair.triple_fuse_basis(basis[i], basis[j], basis[k]);
      if (!(left == right) || !(left == triple))
        return "for " + name(basis[i]) + ", " + name(basis[j]) + ", " + name(basis[k]) + ": (xy)z = " +
               describe(left, name) + ", x(yz) = " + describe(right, name) + ", triple = " + describe(triple, name);
    }
    return {};
  });

  s.run("ext-hecke", "Frobenius reciprocity", [&]() -> std::string {
    std::vector<BasisKey> bar(n);
    for (std::size_t i = 0; i < n; ++i) {
      const E c = pair.conjugate(E::basis(basis[i]));
      if (c.terms.size() != 1 || c.terms.begin()->second != 1) return "conjugate of " + name(basis[i]) + " is not a basis element";
      bar[i] = c.terms.begin()->first;
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const auto a = mult_of(table.product(x, y), basis[z]);
          const auto b = mult_of(table.product(index.at(bar[x]), z), basis[y]);
          const auto c = mult_of(table.product(z, index.at(bar[y])), basis[x]);
          if (a != b || a != c)
            return "m(" + name(basis[x]) + "," + name(basis[y]) + ";" + name(basis[z]) + ") = " + std::to_string(a) +
                   ", rotations give " + std::to_string(b) + " and " + std::to_string(c);
        }
    return {};
  });

  s.run("ext-hecke", "conjugation is an anti-multiplicative involution", [&]() -> std::string {
    for (std::size_t i = 0; i < n; ++i) {
      const E x = E::basis(basis[i]);
      if (!(pair.conjugate(pair.conjugate(x)) == x)) return "double conjugate of " + name(basis[i]) + " differs";
      for (std::size_t j = 0; j < n; ++j) {
        const E y = E::basis(basis[j]);
        if (!(pair.conjugate(table.product(i, j)) == pair.fuse(pair.conjugate(y), pair.conjugate(x))))
          return "(xy)* != y* x* for " + name(basis[i]) + ", " + name(basis[j]);
      }
    }
    return {};
  });

  s.run("ext-hecke", "to_hecke and from_rep are homomorphisms", [&]() -> std::string {
    const FiniteHecke& h = pair.hecke();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto lhs = pair.to_hecke(table.product(i, j));
        const auto rhs = convolve(h, pair.to_hecke(E::basis(basis[i])), pair.to_hecke(E::basis(basis[j])));
        if (!(lhs == rhs))
          return "to_hecke(" + name(basis[i]) + " * " + name(basis[j]) + ") = " + format(h, lhs) + ", expected " +
                 format(h, rhs);
      }
    const auto& reps = pair.irreps_at(0);
    for (const auto& a : reps)
      for (const auto& b : reps) {
        const E lhs = pair.from_rep(tensor(a.rep, b.rep));
        const E rhs = pair.fuse(pair.from_rep(a.rep), pair.from_rep(b.rep));
        if (!(lhs == rhs)) return "from_rep(a (x) b) = " + describe(lhs, name) + ", expected " + describe(rhs, name);
        if (!(pair.from_rep(direct_sum(a.rep, b.rep)) == pair.from_rep(a.rep) + pair.from_rep(b.rep)))
          return "from_rep does not take direct sums to sums";
      }
    return {};
  });

  s.run("ext-hecke", "unique decomposition into irreducibles", [&]() -> std::string {
    for (const auto& k : basis)
      if (!(pair.from_rep_at(k.label, pair.rep(k)) == E::basis(k))) return name(k) + " does not decompose to itself";
    return {};
  });

  s.run("ext-hecke", "dimensions are multiplicative", [&]() -> std::string {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto [l, r] = pair.dims(table.product(i, j));
        const auto [lx, rx] = pair.dims(E::basis(basis[i]));
        const auto [ly, ry] = pair.dims(E::basis(basis[j]));
        if (l != lx * ly || r != rx * ry)
          return "dims(" + name(basis[i]) + " * " + name(basis[j]) + ") = (" + to_string(l) + ", " + to_string(r) +
                 "), expected (" + to_string(lx * ly) + ", " + to_string(rx * ry) + ")";
      }
    return {};
  });

  s.run("ext-hecke", "orbit sums reproduce the product", [&]() -> std::string {
    for (const auto& x : basis)
      for (const auto& y : basis) pair.overcount_check(x, y);
    return {};
  });

  s.run("ext-hecke", "crossed-product dimension identity", [&]() -> std::string {
    pair.crossed_dim_check();
    return {};
  });

  s.run("ext-hecke", "representative independence", [&]() -> std::string {
    for (std::size_t t = 1; t <= opt.random_trials; ++t) {
      const FusionTable other = ext_table(pair, table.pair, opt.seed + t);
      if (!same_products(table, other)) return "table drawn with seed " + std::to_string(opt.seed + t) + " differs";
    }
    return {};
  });
  (void)fp;
}

void elementary_checks(Suite& s, const FinitePair& fp, const ExtHeckePair& pair, const FusionTable& ext,
                       const CheckOptions& opt) {
  const std::string cocycle = fp.entry.omega ? fp.entry.omega->describe() : "trivial";
  std::optional<ElementaryCalculus> calc;
  std::optional<FusionTable> table;
  s.run("elementary", "fusion cocycle bookkeeping", [&]() -> std::string {
    calc.emplace(fp.system, fp.omega, opt.seed);
    table = elementary_table(*calc, fp.entry.name, cocycle, 0);
    return {};
  });
  if (!table) return;
  const auto& basis = calc->basis();
  const std::size_t n = basis.size();
  const auto index = index_of(*table);
  auto name = [&](BasisKey k) { return calc->format_key(k); };
  using E = ExtHeckeElement;

  s.run("elementary", "associativity", [&]() -> std::string {
    if (fp.group->order() > 48 || fp.omega.modulus() > 4) throw Skip{"outside |G| <= 48, modulus <= 4"};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const E left = table_product(*table, index, table->product(i, j), E::basis(basis[k]));
          const E right = table_product(*table, index, E::basis(basis[i]), table->product(j, k));
          if (!(left == right))
            return "for " + name(basis[i]) + ", " + name(basis[j]) + ", " + name(basis[k]) + ": " +
                   describe(left, name) + " vs " + describe(right, name);
        }
    return {};
  });

  s.run("elementary", "agrees with ext-hecke for trivial Omega", [&]() -> std::string {
    const ElementaryCalculus plain(fp.system, Cocycle2::trivial(fp.gamma), opt.seed);
    auto map = [&](const E& x) {
      E out;
      for (const auto& [k, m] : x.terms) out += plain.to_ext_hecke(plain.basis_object(k), pair).scaled(m);
      return out;
    };
    const auto ext_index = index_of(ext);
    for (const auto& x : plain.basis())
      for (const auto& y : plain.basis()) {
        const E lhs = map(plain.fuse_basis(x, y));
        const E rhs = table_product(ext, ext_index, map(E::basis(x)), map(E::basis(y)));
        if (!(lhs == rhs))
          return "to_ext_hecke(" + plain.format_key(x) + " * " + plain.format_key(y) + ") = " +
                 describe(lhs, [&](BasisKey k) { return pair.format_key(k); }) + ", ext-hecke gives " +
                 describe(rhs, [&](BasisKey k) { return pair.format_key(k); });
      }
    return {};
  });

  s.run("elementary", "irreducibility and direct sums", [&]() -> std::string {
    for (const auto& k : basis) {
      const ElementaryBimodule h = calc->basis_object(k);
      if (!calc->is_irreducible(h) || split_irreducibles(h.pi, opt.seed).size() != 1)
        return name(k) + " is not irreducible";
      const ElementaryBimodule hh = calc->direct_sum(h, h);
      if (calc->is_irreducible(hh)) return name(k) + " (+) itself reports irreducible";
      if (split_irreducibles(hh.pi, opt.seed).size() != 2) return name(k) + " (+) itself does not split in two";
      if (!(calc->canonicalize(hh) == E::basis(k, 2))) return name(k) + " (+) itself does not canonicalize to 2 copies";
    }
    return {};
  });

  s.run("elementary", "isomorphism criterion round trip", [&]() -> std::string {
    const FiniteGroup& G = *fp.group;
    const Subgroup& gamma = *fp.gamma;
    std::mt19937_64 rng(opt.seed + 21);
    std::uniform_int_distribution<std::size_t> pick(0, gamma.order() - 1);
    for (const auto& k : basis)
      for (int trial = 0; trial < 4; ++trial) {
        const ElementaryBimodule a = calc->basis_object(k);
        const Elem g = gamma.at(pick(rng)), h = gamma.at(pick(rng));
        const ElementaryBimodule b = calc->make(G.mul(G.mul(g, a.delta), h), calc->moved(a, g, h));
        if (!calc->isomorphic(a, b)) return name(k) + " moved by (" + cycles(G, g) + ", " + cycles(G, h) + ") is not found isomorphic";
        if (!(calc->canonicalize(b) == E::basis(k))) return name(k) + " moved does not canonicalize back";
      }
    return {};
  });

  s.run("elementary", "representative independence", [&]() -> std::string {
    for (std::size_t t = 1; t <= opt.random_trials; ++t) {
      const FusionTable other = elementary_table(*calc, fp.entry.name, cocycle, opt.seed + t);
      if (!same_products(*table, other)) return "table drawn with seed " + std::to_string(opt.seed + t) + " differs";
    }
    return {};
  });
}

void finite_checks(Suite& s, const CatalogEntry& entry, const CheckOptions& opt) {
  std::optional<FinitePair> fp;
  s.run("cli-catalog", "pair loads", [&]() -> std::string {
    fp = load_finite_pair(entry, opt.max_group_order);
    return {};
  });
  if (!fp) return;
  perm_core_checks(s, *fp);
  cocycle_checks(s, *fp, opt);
  projrep_checks(s, *fp, opt);
  finite_hecke_checks(s, *fp, opt);

  std::optional<ExtHeckePair> pair;
  std::optional<FusionTable> table;
  s.run("ext-hecke", "fusion table", [&]() -> std::string {
    pair.emplace(fp->system, opt.seed);
    table = ext_table(*pair, entry.name, 0);
    const FusionTable serial = ext_table(*pair, entry.name, 0, Schedule::Serial);
    if (!same_products(*table, serial)) return "serial and parallel tables differ";
    if (to_json(*table) != to_json(ext_table(*pair, entry.name, 0))) return "JSON output is not reproducible";
    return {};
  });
  if (!table) return;
  ext_hecke_checks(s, *fp, *pair, *table, opt);
  elementary_checks(s, *fp, *pair, *table, opt);
}

// ---------------------------------------------------------------------------
// Arithmetic backends.
// ---------------------------------------------------------------------------

void gl2_checks(Suite& s, const CheckOptions& opt) {
  const GL2Hecke backend;
  const auto all = backend.labels(opt.gl2_bound);
  std::vector<GL2Label> small;
  for (const auto& l : all)
    if (l.d2 <= 6) small.push_back(l);

  s.run("hecke", "gl2 associativity", [&]() -> std::string {
    std::mt19937_64 rng(opt.seed + 31);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::vector<std::array<GL2Label, 3>> ts;
    for (int t = 0; t < 60; ++t) ts.push_back({all[pick(rng)], all[pick(rng)], all[pick(rng)]});
    return hecke_label_triples(backend, ts);
  });
  s.run("hecke", "gl2 commutativity", [&]() -> std::string {
    for (const auto& a : small)
      for (const auto& b : small)
        if (!(convolve_basis(backend, a, b) == convolve_basis(backend, b, a)))
          return backend.format_label(a) + " and " + backend.format_label(b) + " do not commute";
    return {};
  });
  s.run("hecke", "gl2 degree is multiplicative", [&] { return hecke_degree(backend, small); });
  s.run("hecke", "gl2 involution", [&] { return hecke_involution(backend, small); });
  s.run("hecke", "gl2 T(1,p)^2 relation", [&]() -> std::string {
    using E = HeckeElement<GL2Hecke>;
    for (int p : {2, 3}) {
      const E t = E::basis({1, p});
      const E lhs = convolve(backend, t, t);
      const E rhs = E::basis({1, p * p}) + E::basis({p, p}, p + 1);
      if (!(lhs == rhs)) return "T(1," + std::to_string(p) + ")^2 = " + format(backend, lhs);
    }
    return {};
  });
  s.run("hecke", "gl2 lambda is multiplicative", [&] { return hecke_sigma(backend, small); });
}

void bc_checks(Suite& s, const CheckOptions& opt) {
  const BCHecke backend;
  const auto labels = backend.labels(opt.bc_bound);

  s.run("hecke", "bc lambda of (p,0)", [&]() -> std::string {
    for (int p : {2, 3, 5}) {
      const Rational l = modular_lambda(backend, backend.label_of({p, 0}));
      if (l != p) return "lambda(" + std::to_string(p) + ",0) = " + to_string(l);
    }
    return {};
  });
  s.run("hecke", "bc lambda is multiplicative", [&] { return hecke_sigma(backend, labels); });
  s.run("hecke", "bc degree is multiplicative", [&]() -> std::string {
    std::vector<BCLabel> small;
    for (const auto& l : backend.labels(6, 2)) small.push_back(l);
    return hecke_degree(backend, small);
  });
  s.run("hecke", "bc associativity", [&]() -> std::string {
    const auto pool = backend.labels(6, 2);
    std::mt19937_64 rng(opt.seed + 41);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<std::array<BCLabel, 3>> ts;
    for (int t = 0; t < 200; ++t) ts.push_back({pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]});
    return hecke_label_triples(backend, ts);
  });
  s.run("hecke", "bc involution", [&] { return hecke_involution(backend, backend.labels(6, 2)); });
}

}  // namespace

std::vector<CheckResult> run_checks(const CatalogEntry& entry, const CheckOptions& options) {
  Suite s;
  if (entry.backend == "gl2")
    gl2_checks(s, options);
  else if (entry.backend == "bc")
    bc_checks(s, options);
  else
    finite_checks(s, entry, options);
  return std::move(s.results);
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.ok; });
}

}  // namespace heckefuse
