#include <gtest/gtest.h>

#include <numeric>

#include "heckefuse/projrep.hpp"
#include "support.hpp"

using namespace hf_test;

namespace {

constexpr double kTol = 1e-9;

SubgroupPtr whole_of(const GroupPtr& g) { return Subgroup::whole(g); }

// number of cosets xH fixed by g, computed from the definition
std::vector<double> permutation_character(const Subgroup& big, const Subgroup& h) {
  const FiniteGroup& G = big.parent();
  std::vector<double> out(big.order(), 0.0);
  for (std::size_t g = 0; g < big.order(); ++g) {
    std::size_t fixed = 0;
    for (Elem x : big.elements())
      if (h.contains(G.mul(G.inv(x), G.mul(big.at(g), x)))) ++fixed;
    out[g] = static_cast<double>(fixed) / static_cast<double>(h.order());
  }
  return out;
}

std::vector<std::size_t> dims(const std::vector<Irrep>& list) {
  std::vector<std::size_t> d;
  for (const auto& i : list) d.push_back(i.rep.dim());
  return d;
}

}  // namespace

TEST(ProjRep, RegularCharacterOfZ2) {
  const auto w = whole_of(closure(2, {"(0 1)"}));
  const ProjRep reg = regular_rep(w, Cocycle2::trivial(w));
  const auto chi = reg.character();
  EXPECT_NEAR(chi[0].real(), 2.0, kTol);
  EXPECT_NEAR(std::abs(chi[1]), 0.0, kTol);
  EXPECT_EQ(decompose(reg).size(), 2u);
}

TEST(ProjRep, IrrepsOfS3AndS4) {
  const auto s3 = whole_of(closure(3, {"(0 1)", "(0 1 2)"}));
  const auto l3 = irreps(s3, Cocycle2::trivial(s3));
  EXPECT_EQ(dims(l3), (std::vector<std::size_t>{1, 1, 2}));
  // trivial first
  for (const auto& v : l3.front().rep.character()) EXPECT_NEAR(std::abs(v - 1.0), 0.0, kTol);

  const auto s4 = whole_of(closure(4, {"(0 1)", "(0 1 2 3)"}));
  const auto l4 = irreps(s4, Cocycle2::trivial(s4));
  EXPECT_EQ(dims(l4), (std::vector<std::size_t>{1, 1, 2, 3, 3}));
  for (const auto& i : l4) EXPECT_TRUE(is_irreducible(i.rep));
}

TEST(ProjRep, RegularDecomposesWithDimensionMultiplicity) {
  const auto s3 = whole_of(closure(3, {"(0 1)", "(0 1 2)"}));
  const auto ms = decompose(regular_rep(s3, Cocycle2::trivial(s3)));
  ASSERT_EQ(ms.size(), 3u);
  for (const auto& [cls, mult] : ms) EXPECT_EQ(mult, cls.dim);
}

TEST(ProjRep, TwistedKleinHasOneTwoDimensionalClass) {
  const FinitePair fp = pair("D4_klein");
  const ProjRep reg = regular_rep(fp.gamma, fp.omega);
  const auto ms = decompose(reg);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms.begin()->first.dim, 2u);
  EXPECT_EQ(ms.begin()->second, 2u);
  const auto list = irreps(fp.gamma, fp.omega);
  ASSERT_EQ(list.size(), 1u);
  // character of the unique class: 2 at e, 0 elsewhere
  const auto chi = list[0].rep.character();
  EXPECT_NEAR(chi[0].real(), 2.0, kTol);
  for (std::size_t g = 1; g < chi.size(); ++g) EXPECT_NEAR(std::abs(chi[g]), 0.0, kTol);
}

TEST(ProjRep, HeisenbergThreeHasOneThreeDimensionalClass) {
  const FinitePair fp = pair("Heis3");
  const auto list = irreps(fp.gamma, fp.omega);
  ASSERT_EQ(list.size(), 1u);
  EXPECT_EQ(list[0].rep.dim(), 3u);
  EXPECT_EQ(multiplicities(regular_rep(fp.gamma, fp.omega), list), (std::vector<std::uint64_t>{3}));
}

TEST(ProjRep, InductionMatchesPermutationCharacter) {
  const auto G = closure(3, {"(0 1)", "(0 1 2)"});
  const auto s3 = whole_of(G);
  const auto h = generated(G, {"(0 1)"});
  const ProjRep ind = induce(ProjRep::trivial(h), s3, Cocycle2::trivial(s3));
  EXPECT_EQ(ind.dim(), 3u);
  const auto expected = permutation_character(*s3, *h);
  const auto chi = ind.character();
  for (std::size_t g = 0; g < chi.size(); ++g) {
    EXPECT_NEAR(chi[g].real(), expected[g], kTol);
    EXPECT_NEAR(chi[g].imag(), 0.0, kTol);
  }
  EXPECT_NO_THROW(ind.validate());
}

TEST(ProjRep, InducedDimensionIsIndexTimesDim) {
  const FinitePair fp = pair("D4_in_S4");
  const auto s4 = whole_of(fp.group);
  for (const auto& irr : irreps(fp.gamma, Cocycle2::trivial(fp.gamma))) {
    const ProjRep ind = induce(irr.rep, s4, Cocycle2::trivial(s4));
    EXPECT_EQ(ind.dim(), irr.rep.dim() * 3);
  }
}

TEST(ProjRep, FrobeniusReciprocity) {
  const auto G = closure(4, {"(0 1)", "(0 1 2 3)"});
  const auto s4 = whole_of(G);
  const auto h = generated(G, {"(0 1)", "(0 1 2)"});
  const Cocycle2 triv = Cocycle2::trivial(s4);
  const auto big = irreps(s4, triv);
  const auto small = irreps(h, Cocycle2::trivial(h));
  for (const auto& rho : small) {
    const ProjRep ind = induce(rho.rep, s4, triv);
    for (const auto& sigma : big)
      EXPECT_EQ(hom_dim(ind, sigma.rep), hom_dim(rho.rep, restrict_to(sigma.rep, h)));
  }
}

TEST(ProjRep, TensorConjugateTwist) {
  const auto s3 = whole_of(closure(3, {"(0 1)", "(0 1 2)"}));
  const auto list = irreps(s3, Cocycle2::trivial(s3));
  const ProjRep& std2 = list.back().rep;
  EXPECT_TRUE(equivalent(tensor(std2, ProjRep::trivial(s3)), std2));
  EXPECT_TRUE(equivalent(conjugate(std2), std2));  // real character
  // sign x standard = standard; standard x standard = 1 + sign + standard
  EXPECT_TRUE(equivalent(tensor(list[1].rep, std2), std2));
  const auto sq = decompose(tensor(std2, std2));
  EXPECT_EQ(sq.size(), 3u);

  const FinitePair fp = pair("D4_klein");
  const ProjRep pi = irreps(fp.gamma, fp.omega)[0].rep;
  ScalarFunction phi = ScalarFunction::zero(fp.gamma, 2);
  phi.values[1] = 1;
  const ProjRep tw = twist(pi, phi);
  EXPECT_TRUE(tw.cocycle().same_values(coboundary(phi) * fp.omega));
  EXPECT_NO_THROW(tw.validate());
  // conjugate has the inverse cocycle, which on Z/2 x Z/2 has the same values
  EXPECT_TRUE(conjugate(pi).cocycle().same_values(fp.omega.inverse()));
}

TEST(ProjRep, HomDimFacts) {
  const auto s3 = whole_of(closure(3, {"(0 1)", "(0 1 2)"}));
  const auto list = irreps(s3, Cocycle2::trivial(s3));
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < list.size(); ++j)
      EXPECT_EQ(hom_dim(list[i].rep, list[j].rep), i == j ? 1u : 0u);
  const ProjRep sum = direct_sum(list[2].rep, list[2].rep);
  EXPECT_EQ(hom_dim(sum, sum), 4u);
  EXPECT_FALSE(is_irreducible(sum));
  EXPECT_EQ(split_irreducibles(sum).size(), 2u);
  EXPECT_THROW(hom_dim(list[0].rep, ProjRep::trivial(whole_of(closure(2, {"(0 1)"})))), DomainError);
}

TEST(ProjRep, ConjugateByNormalizerPermutesClasses) {
  const FinitePair fp = pair("Heis3");
  const auto list = irreps(fp.gamma, fp.omega);
  const ProjRep moved = conjugate_by(list[0].rep, fp.gamma, E(fp.group, "(1 2)(3 6)(4 8)(5 7)"));
  // -1 preserves x y', so the cocycle is unchanged and the class is the unique one
  EXPECT_TRUE(moved.cocycle().same_values(fp.omega));
  EXPECT_TRUE(equivalent(moved, list[0].rep));
}

TEST(ProjRep, FromMatricesRejectsBadInput) {
  const auto w = whole_of(closure(2, {"(0 1)"}));
  const Cocycle2 triv = Cocycle2::trivial(w);
  Matrix one = Matrix::Identity(1, 1);
  Matrix minus = -one;
  EXPECT_NO_THROW(ProjRep::from_matrices(w, triv, {one, minus}));
  Matrix two = 2.0 * one;
  EXPECT_THROW(ProjRep::from_matrices(w, triv, {one, two}), InvariantViolation);
  Matrix i = Matrix::Constant(1, 1, std::complex<double>(0, 1));
  // unitary but i^2 = -1 != pi(e)
  EXPECT_THROW(ProjRep::from_matrices(w, triv, {one, i}), InvariantViolation);
  EXPECT_THROW(ProjRep::from_matrices(w, triv, {i, one}), InvariantViolation);
  EXPECT_THROW(ProjRep::from_matrices(w, triv, {one}), DomainError);
}

TEST(ProjRep, ScalarRepresentationCarriesCoboundary) {
  const auto z4 = whole_of(closure(4, {"(0 1 2 3)"}));
  ScalarFunction phi = ScalarFunction::zero(z4, 4);
  phi.values = {0, 1, 3, 2};
  const ProjRep s = ProjRep::scalar(phi);
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_TRUE(s.cocycle().same_values(coboundary(phi)));
  EXPECT_NO_THROW(s.validate());
}
