#include <gtest/gtest.h>

#include <array>
#include <map>
#include <numeric>

#include "heckefuse/hecke.hpp"
#include "support.hpp"

using namespace hf_test;

TEST(FiniteHecke, MatchesFunctionConvolutionOnS4) {
  for (const char* name : {"S3_in_S4", "D4_in_S4"}) {
    const FinitePair fp = pair(name);
    const FiniteHecke backend(fp.system);
    const FunctionModel model(*fp.group, *fp.gamma);
    const DoubleCosetSystem& sys = *fp.system;
    for (std::uint32_t a = 0; a < sys.size(); ++a)
      for (std::uint32_t b = 0; b < sys.size(); ++b) {
        const auto f = model.convolve(model.indicator(sys[a].representative), model.indicator(sys[b].representative));
        const auto got = convolve_basis(backend, a, b);
        for (std::uint32_t z = 0; z < sys.size(); ++z) {
          const Elem rep = sys[z].representative;
          const auto it = got.terms.find(z);
          const Integer c = it == got.terms.end() ? Integer(0) : it->second;
          EXPECT_EQ(c, Integer(f[rep])) << name << " " << a << "*" << b << " at " << z;
          // bi-invariance of the brute-force product
          for (Elem m : sys[z].members) EXPECT_EQ(f[m], f[rep]);
        }
      }
  }
}

TEST(FiniteHecke, S3InS4Products) {
  const FinitePair fp = pair("S3_in_S4");
  const FiniteHecke backend(fp.system);
  const auto K = backend.parse_label("K");
  const auto kk = convolve_basis(backend, K, K);
  EXPECT_EQ(format(backend, kk), "3*e + 2*T[K]");
  EXPECT_EQ(degree(backend, kk), 9);
  EXPECT_EQ(degree(backend, HeckeElement<FiniteHecke>::basis(K)), 3);
}

TEST(FiniteHecke, UnitAndInvolution) {
  for (const char* name : {"S3_in_S4", "D4_in_S4", "Z3_regular", "D4_klein"}) {
    const FinitePair fp = pair(name);
    const FiniteHecke backend(fp.system);
    const auto e = HeckeElement<FiniteHecke>::unit(backend);
    for (auto l : backend.labels()) {
      const auto x = HeckeElement<FiniteHecke>::basis(l, 2);
      EXPECT_EQ(convolve(backend, e, x), x);
      EXPECT_EQ(convolve(backend, x, e), x);
      EXPECT_EQ(involution(backend, involution(backend, x)), x);
      // the inverse double coset, computed from the definition
      const Elem inv = fp.group->inv(fp.system->cosets()[l].representative);
      EXPECT_EQ(backend.inverse_label(l), fp.system->label(inv));
    }
  }
  const FinitePair s = pair("S3_in_S4");
  const FiniteHecke b(s.system);
  EXPECT_EQ(b.inverse_label(b.parse_label("K")), b.parse_label("K"));
}

TEST(FiniteHecke, InvolutionIsAntiMultiplicative) {
  const FinitePair fp = pair("Z3_regular");
  const FiniteHecke backend(fp.system);
  for (auto x : backend.labels())
    for (auto y : backend.labels()) {
      const auto X = HeckeElement<FiniteHecke>::basis(x), Y = HeckeElement<FiniteHecke>::basis(y);
      EXPECT_EQ(involution(backend, convolve(backend, X, Y)),
                convolve(backend, involution(backend, Y), involution(backend, X)));
    }
}

TEST(GL2Hecke, MatchesIndependentEnumeration) {
  const GL2Hecke backend;
  const auto labels = backend.labels(6);
  for (const auto& x : labels)
    for (const auto& y : labels) {
      auto as_int = [](const Rational& q) { return static_cast<std::int64_t>(numerator(q)); };
      const auto expected = gl2_oracle(as_int(x.d1), as_int(x.d2), as_int(y.d1), as_int(y.d2));
      const auto got = convolve_basis(backend, x, y);
      ASSERT_EQ(got.terms.size(), expected.size()) << backend.format_label(x) << " * " << backend.format_label(y);
      for (const auto& [z, c] : got.terms) {
        const auto it = expected.find({as_int(z.d1), as_int(z.d2)});
        ASSERT_NE(it, expected.end());
        EXPECT_EQ(c, Integer(it->second));
      }
    }
}

TEST(GL2Hecke, RightCountsAndLambda) {
  const GL2Hecke backend;
  for (std::int64_t d1 : {1, 2})
    for (std::int64_t k : {1, 2, 3, 4, 5, 6}) {
      const GL2Label l{Rational(d1), Rational(d1 * k)};
      EXPECT_EQ(backend.right_count(l), Integer(gl2_cosets(d1, d1 * k).size()));
    }
  for (std::int64_t p : {2, 3, 5}) {
    const GL2Label l{1, Rational(p)};
    EXPECT_EQ(modular_lambda(backend, l), Rational(1));
    EXPECT_EQ(backend.right_count(l), Integer(p + 1));
  }
  const auto sq = convolve_basis(backend, GL2Label{1, 2}, GL2Label{1, 2});
  EXPECT_EQ(format(backend, sq), "T[1,4] + 3*T[2,2]");
  EXPECT_EQ(format(backend, convolve_basis(backend, GL2Label{1, 2}, GL2Label{1, 3})), "T[1,6]");
}

TEST(GL2Hecke, LabelOfAndInverse) {
  const GL2Hecke backend;
  const GL2Hecke::Element g{2, 1, 0, 4};  // gcd 1, det 8
  EXPECT_EQ(backend.label_of(g), (GL2Label{1, 8}));
  const GL2Label inv = backend.inverse_label({1, 8});
  EXPECT_EQ(inv, (GL2Label{Rational(1, 8), 1}));
  EXPECT_EQ(backend.inverse_label(inv), (GL2Label{1, 8}));
  EXPECT_THROW(backend.label_of({0, 1, 1, 0}), DomainError);
  EXPECT_THROW(backend.parse_label("2,3"), ParseError);
}

TEST(BCHecke, CountsAndLambda) {
  const BCHecke backend;
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const BCLabel l{Rational(p, q), 0};
      // b + (1/q)Z modulo Z has q classes; modulo (p/q)Z it has p
      EXPECT_EQ(backend.right_count(l), Integer(q));
      EXPECT_EQ(backend.left_count(l), Integer(p));
    }
  for (int p : {2, 3, 5, 7}) EXPECT_EQ(modular_lambda(backend, BCLabel{Rational(p), 0}), Rational(p));
}

TEST(BCHecke, ProductMatchesCosetCount) {
  const BCHecke backend;
  for (const auto& x : backend.labels(4, 2))
    for (const auto& y : backend.labels(4, 2)) {
      // independent: right coset reps (a, b + k/q), labels reduce b modulo 1/q'
      auto reps = [](const BCLabel& l) {
        std::vector<std::pair<Rational, Rational>> r;
        const Integer q = denominator(l.a);
        for (Integer k = 0; k < q; ++k) r.emplace_back(l.a, l.b + Rational(k, q));
        return r;
      };
      auto reduce = [](const Rational& a, Rational b) {
        const Rational step(1, denominator(a));
        const Rational t = b / step;
        const Integer fl = numerator(t) / denominator(t) - (numerator(t) < 0 && numerator(t) % denominator(t) != 0 ? 1 : 0);
        b -= Rational(fl) * step;
        return BCLabel{a, b};
      };
      std::map<BCLabel, Integer> counts;
      for (const auto& [a1, b1] : reps(x))
        for (const auto& [a2, b2] : reps(y)) counts[reduce(a1 * a2, a1 * b2 + b1)] += 1;
      const auto got = convolve_basis(backend, x, y);
      ASSERT_EQ(got.terms.size(), counts.size());
      for (const auto& [z, n] : counts) {
        const auto it = got.terms.find(z);
        ASSERT_NE(it, got.terms.end()) << backend.format_label(z);
        EXPECT_EQ(it->second * Integer(denominator(z.a)), n);
      }
    }
}

TEST(BCHecke, SigmaAndInverse) {
  const BCHecke backend;
  const auto prod = convolve_basis(backend, BCLabel{2, 0}, BCLabel{3, 0});
  for (const auto& [z, c] : prod.terms) EXPECT_EQ(modular_lambda(backend, z), Rational(6));
  EXPECT_EQ(format(backend, convolve_basis(backend, BCLabel{2, 0}, BCLabel{Rational(1, 3), 0})), "T[2/3;0]");
  for (const auto& l : backend.labels(5, 3)) {
    EXPECT_EQ(backend.inverse_label(backend.inverse_label(l)), l);
    EXPECT_EQ(modular_lambda(backend, backend.inverse_label(l)), 1 / modular_lambda(backend, l));
  }
  EXPECT_FALSE(sigma_violation(backend, BCLabel{2, Rational(1, 2)}, BCLabel{Rational(1, 3), 0}).has_value());
}

TEST(Rationals, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(Rational(2, 3)), "2/3");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/x"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  try {
    parse_rational("12/3a");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(HeckeFormat, ZeroAndScaling) {
  const FinitePair fp = pair("S3_in_S4");
  const FiniteHecke backend(fp.system);
  EXPECT_EQ(format(backend, HeckeElement<FiniteHecke>{}), "0");
  EXPECT_EQ(format(backend, HeckeElement<FiniteHecke>::basis(0, 4)), "4*e");
  EXPECT_TRUE(HeckeElement<FiniteHecke>::basis(0, 0).empty());
}
