#include <gtest/gtest.h>

#include <random>

#include "heckefuse/cocycle.hpp"
#include "support.hpp"

using namespace hf_test;

namespace {

// (Z/n)^2 acting regularly on n^2 points, point x + n y.
struct Torus {
  GroupPtr group;
  SubgroupPtr whole;
  Elem a, b;
  std::size_t n;

  explicit Torus(std::size_t n_) : n(n_) {
    const std::size_t d = n * n;
    std::vector<Point> sx(d), sy(d);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        sx[x + n * y] = static_cast<Point>((x + 1) % n + n * y);
        sy[x + n * y] = static_cast<Point>(x + n * ((y + 1) % n));
      }
    group = FiniteGroup::closure(d, {Perm(sx), Perm(sy)});
    whole = Subgroup::whole(group);
    a = group->index_of(Perm(sx));
    b = group->index_of(Perm(sy));
  }

  // coordinates of a local index
  std::pair<std::size_t, std::size_t> xy(std::size_t local) const {
    const Point p = group->element(whole->at(local))(0);
    return {p % n, p / n};
  }
};

Cocycle2 table_cocycle(const Torus& t, std::uint32_t m, auto f) {
  const std::size_t k = t.whole->order();
  std::vector<std::uint32_t> table(k * k);
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t h = 0; h < k; ++h) {
      const auto [x1, y1] = t.xy(g);
      const auto [x2, y2] = t.xy(h);
      table[g * k + h] = static_cast<std::uint32_t>(f(x1, y1, x2, y2) % m);
    }
  return Cocycle2::from_table(t.whole, m, table);
}

}  // namespace

TEST(Cocycle, ValidateAcceptsTrivialAndKleinBc) {
  const Torus v(2);
  EXPECT_NO_THROW(validate(Cocycle2::trivial(v.whole)));
  // (-1)^{bc} on ((a,b),(c,d)), checked over all 64 triples
  const Cocycle2 omega = table_cocycle(v, 2, [](auto, auto b, auto c, auto) { return b * c; });
  EXPECT_NO_THROW(validate(omega));
  EXPECT_FALSE(find_cocycle_violation(*v.whole, 2, omega.table()).has_value());
}

TEST(Cocycle, ValidateReportsWitness) {
  const Torus v(2);
  std::vector<std::uint32_t> table(16, 0);
  table[1 * 4 + 2] = 1;
  const auto w = find_cocycle_violation(*v.whole, 2, table);
  ASSERT_TRUE(w.has_value());
  EXPECT_THROW(Cocycle2::from_table(v.whole, 2, table), CocycleViolation);
  // the witness really violates Omega(g,h) Omega(gh,k) = Omega(g,hk) Omega(h,k)
  const Subgroup& s = *v.whole;
  const auto g = w->g(), h = w->h(), k = w->k();
  auto at = [&](std::size_t x, std::size_t y) { return table[x * 4 + y]; };
  EXPECT_NE((at(g, h) + at(s.local_mul(g, h), k)) % 2, (at(g, s.local_mul(h, k)) + at(h, k)) % 2);
}

TEST(Coboundary, DirectEvaluation) {
  const Torus v(2);
  EXPECT_TRUE(coboundary(ScalarFunction::zero(v.whole, 3)).is_trivial());

  // Z/2: every normalized phi has trivial coboundary
  const auto z2 = closure(2, {"(0 1)"});
  const auto w2 = Subgroup::whole(z2);
  ScalarFunction phi = ScalarFunction::zero(w2, 2);
  phi.values[1] = 1;
  EXPECT_TRUE(coboundary(phi).is_trivial());

  // Z/4 with phi(k) = k mod 2, m = 2: a homomorphism, so d phi = 0
  const auto z4 = closure(4, {"(0 1 2 3)"});
  const auto w4 = Subgroup::whole(z4);
  ScalarFunction psi = ScalarFunction::zero(w4, 2);
  // r^k sends 0 to k
  for (std::size_t i = 0; i < 4; ++i) psi.values[i] = z4->element(w4->at(i))(0) % 2;
  const Cocycle2 d = coboundary(psi);
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t h = 0; h < 4; ++h)
      EXPECT_EQ(d.exponent(g, h), (psi(g) + psi(h) + 2 - psi(w4->local_mul(g, h))) % 2);
  EXPECT_TRUE(d.is_trivial());
}

TEST(Coboundary, IsMultiplicative) {
  const Torus t(3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> pick(0, 5);
  for (int trial = 0; trial < 20; ++trial) {
    ScalarFunction a = ScalarFunction::zero(t.whole, 6), b = a, ab = a;
    for (std::size_t i = 1; i < a.values.size(); ++i) {
      a.values[i] = pick(rng);
      b.values[i] = pick(rng);
      ab.values[i] = (a.values[i] + b.values[i]) % 6;
    }
    EXPECT_TRUE(coboundary(ab).same_values(coboundary(a) * coboundary(b)));
  }
}

TEST(Cohomologous, KleinClassesAreSeparated) {
  const Torus v(2);
  const Cocycle2 omega = heisenberg_cocycle(v.whole, v.a, v.b, 2, 1);
  EXPECT_FALSE(cohomologous(Cocycle2::trivial(v.whole, 2), omega).has_value());
  // exhaustive confirmation over all 8 normalized phi
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    ScalarFunction phi = ScalarFunction::zero(v.whole, 2);
    for (std::size_t i = 1; i < 4; ++i) phi.values[i] = (bits >> (i - 1)) & 1;
    EXPECT_FALSE(coboundary(phi).same_values(omega));
  }
  // (-1)^{bc} is in the same nontrivial class
  const Cocycle2 bc = table_cocycle(v, 2, [](auto, auto b, auto c, auto) { return b * c; });
  EXPECT_TRUE(cohomologous(omega, bc).has_value());
}

TEST(Cohomologous, RoundTripAndEquivalence) {
  const Torus t(3);
  const Cocycle2 omega = heisenberg_cocycle(t.whole, t.a, t.b, 3, 1);
  const auto self = cohomologous(omega, omega);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(coboundary(*self).is_trivial());

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint32_t> pick(0, 2);
  for (int trial = 0; trial < 10; ++trial) {
    ScalarFunction phi0 = ScalarFunction::zero(t.whole, 3);
    for (std::size_t i = 1; i < phi0.values.size(); ++i) phi0.values[i] = pick(rng);
    const Cocycle2 other = coboundary(phi0) * omega;
    const auto phi = cohomologous(omega, other);
    ASSERT_TRUE(phi.has_value());
    EXPECT_TRUE(coboundary(*phi).same_values(coboundary(phi0)));
    EXPECT_TRUE(cohomologous(other, omega).has_value());
  }
}

TEST(Heisenberg, ClassesDistinctForSmallN) {
  for (std::uint32_t n : {2u, 3u, 4u}) {
    const Torus t(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      const Cocycle2 ck = heisenberg_cocycle(t.whole, t.a, t.b, n, k);
      validate(ck);
      if (k == 0) EXPECT_TRUE(ck.is_trivial());
      for (std::uint32_t k2 = 0; k2 < n; ++k2)
        EXPECT_EQ(cohomologous(ck, heisenberg_cocycle(t.whole, t.a, t.b, n, k2)).has_value(), k == k2)
            << "N=" << n << " k=" << k << " k'=" << k2;
    }
  }
}

TEST(Heisenberg, ExplicitFormula) {
  const Torus t(3);
  const Cocycle2 c = heisenberg_cocycle(t.whole, t.a, t.b, 3, 2);
  for (std::size_t g = 0; g < 9; ++g)
    for (std::size_t h = 0; h < 9; ++h) {
      const auto [x1, y1] = t.xy(g);
      const auto [x2, y2] = t.xy(h);
      (void)y1;
      (void)x2;
      EXPECT_EQ(c.exponent(g, h), (2 * x1 * y2) % 3);
    }
}

TEST(PhiG, SatisfiesConjugationIdentity) {
  // nonabelian case: Heis3's Gamma inside G, conjugating by elements outside Gamma
  for (const char* name : {"Heis3", "D4_klein"}) {
    const FinitePair fp = pair(name);
    for (std::size_t g = 0; g < fp.gamma->order(); ++g) {
      const ScalarFunction phi = phi_g(fp.omega, g);
      EXPECT_EQ(phi(0), 0u);
      EXPECT_TRUE(fp.omega.conjugated(fp.gamma, fp.gamma->at(g)).same_values(coboundary(phi) * fp.omega));
    }
  }
  // Klein four: abelian, so Ad g = id and d phi_g is trivial
  const Torus v(2);
  const Cocycle2 omega = heisenberg_cocycle(v.whole, v.a, v.b, 2, 1);
  for (std::size_t g = 0; g < 4; ++g) EXPECT_TRUE(coboundary(phi_g(omega, g)).is_trivial());
  EXPECT_TRUE(coboundary(phi_g(Cocycle2::trivial(v.whole), 1)).is_trivial());
}

TEST(PhiG, NonconstantOnNonabelianConjugation) {
  // Omega transported by an element of N(Gamma) outside Gamma
  const FinitePair fp = pair("Heis3");
  const FiniteGroup& G = *fp.group;
  const Elem swap = G.index_of(P("(1 3)(2 6)(5 7)", 9));
  const Cocycle2 moved = fp.omega.conjugated(fp.gamma, swap);
  const auto phi = cohomologous(fp.omega, moved);
  // the swap sends x y' to y x', which is the inverse class
  EXPECT_FALSE(phi.has_value());
  const auto back = cohomologous(fp.omega.inverse(), moved);
  ASSERT_TRUE(back.has_value());
  bool nonconstant = false;
  for (auto v : back->values) nonconstant = nonconstant || v != 0;
  EXPECT_TRUE(nonconstant);
}

TEST(Homomorphisms, CountOnCyclicAndKlein) {
  const Torus v(2);
  EXPECT_EQ(homomorphisms_to_cyclic(v.whole, 2).size(), 4u);
  const auto z4 = closure(4, {"(0 1 2 3)"});
  EXPECT_EQ(homomorphisms_to_cyclic(Subgroup::whole(z4), 4).size(), 4u);
  EXPECT_EQ(homomorphisms_to_cyclic(Subgroup::whole(z4), 2).size(), 2u);
}

TEST(Cocycle, RestrictAndConjugate) {
  const FinitePair fp = pair("D4_klein");
  const auto sub = generated(fp.group, {"(0 2)"});
  const Cocycle2 r = fp.omega.restrict_to(sub);
  EXPECT_EQ(r.size(), 2u);
  validate(r);
  const Cocycle2 c = fp.omega.conjugated(fp.gamma, E(fp.group, "(0 1 2 3)"));
  validate(c);
}
