#include <gtest/gtest.h>

#include <random>

#include "heckefuse/ext_hecke.hpp"
#include "support.hpp"

using namespace hf_test;

namespace {

using Ext = ExtHeckeElement;

struct Fixture {
  FinitePair fp;
  ExtHeckePair ext;
  explicit Fixture(const std::string& name) : fp(pair(name)), ext(fp.system) {}
};

std::uint64_t total_dim_at(const ExtHeckePair& ext, const Ext& x, std::uint32_t label) {
  std::uint64_t d = 0;
  for (const auto& [k, m] : x.terms)
    if (k.label == label) d += m * ext.rep(k).dim();
  return d;
}

}  // namespace

TEST(ExtHecke, S3InS4Basis) {
  const Fixture f("S3_in_S4");
  // S3 has three irreducibles, Gamma_K = S2 has two
  ASSERT_EQ(f.ext.basis().size(), 5u);
  EXPECT_EQ(f.ext.irreps_at(0).size(), 3u);
  EXPECT_EQ(f.ext.irreps_at(1).size(), 2u);
  EXPECT_EQ(f.fp.system->cosets()[1].gamma_g->order(), 2u);
  std::size_t products = 0;
  for (const auto& x : f.ext.basis())
    for (const auto& y : f.ext.basis()) {
      (void)f.ext.fuse_basis(x, y);
      ++products;
    }
  EXPECT_EQ(products, 25u);
  EXPECT_EQ(f.ext.format_key({1, 0}), "[K:0]");
}

TEST(ExtHecke, SquareOfTrivialOnK) {
  const Fixture f("S3_in_S4");
  const BasisKey x{1, 0};
  const Ext sq = f.ext.fuse_basis(x, x);
  // at e: the permutation representation of S3 on 3 points, trivial + standard
  Ext at_e;
  for (const auto& [k, m] : sq.terms)
    if (k.label == 0) at_e.terms.emplace(k, m);
  EXPECT_EQ(at_e, Ext::basis({0, 0}) + Ext::basis({0, 2}));
  EXPECT_EQ(total_dim_at(f.ext, sq, 1), 2u);
  EXPECT_EQ(format(f.ext.hecke(), f.ext.to_hecke(sq)), "3*e + 2*T[K]");
}

TEST(ExtHecke, ToHeckeMatchesFunctionConvolution) {
  for (const char* name : {"S3_in_S4", "D4_in_S4", "Z3_regular"}) {
    const Fixture f(name);
    const FunctionModel model(*f.fp.group, *f.fp.gamma);
    const auto& sys = *f.fp.system;
    for (const auto& x : f.ext.basis())
      for (const auto& y : f.ext.basis()) {
        const auto h = f.ext.to_hecke(f.ext.fuse_basis(x, y));
        // dimension-weighted indicator functions
        auto fn = [&](BasisKey k) {
          auto v = model.indicator(sys[k.label].representative);
          for (auto& c : v) c *= static_cast<std::int64_t>(f.ext.rep(k).dim());
          return v;
        };
        const auto conv = model.convolve(fn(x), fn(y));
        for (std::uint32_t z = 0; z < sys.size(); ++z) {
          const auto it = h.terms.find(z);
          EXPECT_EQ(it == h.terms.end() ? Integer(0) : it->second, Integer(conv[sys[z].representative]));
        }
      }
  }
}

TEST(ExtHecke, AssociativityAndTripleFormula) {
  const Fixture f("S3_in_S4");
  const auto& b = f.ext.basis();
  for (const auto& x : b)
    for (const auto& y : b)
      for (const auto& z : b) {
        const Ext left = f.ext.fuse(f.ext.fuse_basis(x, y), Ext::basis(z));
        const Ext right = f.ext.fuse(Ext::basis(x), f.ext.fuse_basis(y, z));
        EXPECT_EQ(left, right);
        EXPECT_EQ(left, f.ext.triple_fuse_basis(x, y, z));
      }
}

TEST(ExtHecke, UnitAndFromRep) {
  const Fixture f("D4_in_S4");
  for (const auto& k : f.ext.basis()) {
    EXPECT_EQ(f.ext.fuse(f.ext.unit(), Ext::basis(k)), Ext::basis(k));
    EXPECT_EQ(f.ext.fuse(Ext::basis(k), f.ext.unit()), Ext::basis(k));
    EXPECT_EQ(f.ext.from_rep_at(k.label, f.ext.rep(k)), Ext::basis(k));
  }
  // at the unit coset the product is the tensor product of Gamma-representations
  const auto& irr = f.ext.irreps_at(0);
  for (const auto& a : irr)
    for (const auto& c : irr)
      EXPECT_EQ(f.ext.fuse(f.ext.from_rep(a.rep), f.ext.from_rep(c.rep)), f.ext.from_rep(tensor(a.rep, c.rep)));
}

TEST(ExtHecke, FrobeniusWithPlainMultiplicities) {
  const Fixture f("D4_in_S4");
  const auto& b = f.ext.basis();
  auto bar = [&](BasisKey k) { return f.ext.conjugate(Ext::basis(k)).terms.begin()->first; };
  auto m = [&](BasisKey x, BasisKey y, BasisKey z) -> std::uint64_t {
    const Ext p = f.ext.fuse_basis(x, y);
    const auto it = p.terms.find(z);
    return it == p.terms.end() ? 0 : it->second;
  };
  for (const auto& x : b)
    for (const auto& y : b)
      for (const auto& z : b) {
        EXPECT_EQ(m(x, y, z), m(bar(x), z, y));
        EXPECT_EQ(m(x, y, z), m(z, bar(y), x));
      }
}

TEST(ExtHecke, ConjugationIsAntiMultiplicative) {
  const Fixture f("S3_in_S4");
  for (const auto& x : f.ext.basis()) {
    const Ext cx = f.ext.conjugate(Ext::basis(x));
    ASSERT_EQ(cx.terms.size(), 1u);
    EXPECT_EQ(f.ext.conjugate(cx), Ext::basis(x));
    for (const auto& y : f.ext.basis())
      EXPECT_EQ(f.ext.conjugate(f.ext.fuse_basis(x, y)),
                f.ext.fuse(f.ext.conjugate(Ext::basis(y)), f.ext.conjugate(Ext::basis(x))));
  }
}

TEST(ExtHecke, DimsAndOvercount) {
  const Fixture f("S3_in_S4");
  // [K:0]: three right cosets, three left cosets, trivial of dimension 1
  const auto [l, r] = f.ext.dims(Ext::basis({1, 0}));
  EXPECT_EQ(l, Rational(3));
  EXPECT_EQ(r, Rational(3));
  for (const auto& x : f.ext.basis())
    for (const auto& y : f.ext.basis()) {
      EXPECT_NO_THROW(f.ext.overcount_check(x, y));
      const auto [pl, pr] = f.ext.dims(f.ext.fuse_basis(x, y));
      const auto [xl, xr] = f.ext.dims(Ext::basis(x));
      const auto [yl, yr] = f.ext.dims(Ext::basis(y));
      EXPECT_EQ(pl, xl * yl);
      EXPECT_EQ(pr, xr * yr);
    }
}

TEST(ExtHecke, CrossedDimensionIdentity) {
  const Fixture f("S3_in_S4");
  // |Gamma \ G| |Gamma| = 4 * 6 = 24 = 1^2 * 6 + 3^2 * 2
  std::size_t sum = 0;
  for (const auto& dc : f.fp.system->cosets()) sum += dc.right_coset_reps.size() * dc.right_coset_reps.size() * dc.gamma_g->order();
  EXPECT_EQ(sum, 24u);
  EXPECT_NO_THROW(f.ext.crossed_dim_check());
  for (const char* name : {"D4_in_S4", "Z3_regular", "D4_klein"}) EXPECT_NO_THROW(Fixture(name).ext.crossed_dim_check());
}

TEST(ExtHecke, RandomRepresentativesGiveTheSameProducts) {
  const Fixture f("D4_in_S4");
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial)
    for (const auto& x : f.ext.basis())
      for (const auto& y : f.ext.basis()) EXPECT_EQ(f.ext.fuse_basis(x, y, &rng), f.ext.fuse_basis(x, y));
}

TEST(ExtHecke, TransportAlongDecompositions) {
  const Fixture f("S3_in_S4");
  const auto& sys = *f.fp.system;
  const ProjRep& xi = f.ext.rep({1, 1});
  std::mt19937_64 rng(5);
  for (Elem h : sys[1].members) {
    const ProjRep canon = f.ext.transport_rep(xi, h);
    EXPECT_EQ(canon.dim(), 1u);
    for (int t = 0; t < 3; ++t) EXPECT_TRUE(equivalent(f.ext.transport_rep(xi, h, &rng), canon));
  }
}

TEST(ExtHecke, NormalSubgroupGivesAGroup) {
  // Gamma = A3 normal in S3: every product of basis elements is a single basis element
  const Fixture f("Z3_regular");
  const auto& b = f.ext.basis();
  ASSERT_EQ(b.size(), 6u);
  bool commutative = true;
  for (const auto& x : b) {
    bool has_inverse = false;
    for (const auto& y : b) {
      const Ext p = f.ext.fuse_basis(x, y);
      ASSERT_EQ(p.terms.size(), 1u);
      EXPECT_EQ(p.terms.begin()->second, 1u);
      has_inverse = has_inverse || p == f.ext.unit();
      commutative = commutative && p == f.ext.fuse_basis(y, x);
    }
    EXPECT_TRUE(has_inverse);
  }
  // the dual Z/3 is acted on by inversion, so the group is S3
  EXPECT_FALSE(commutative);
}
