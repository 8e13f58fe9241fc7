#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace zdiv;

namespace {

Polynomial P(const FiniteSemiring& s, const std::string& text, PolyShape shape = {}) { return parse_poly(text, s, shape); }

}  // namespace

TEST(Polynomial, ParseFormatRoundTrip) {
  const auto s = builtin_semiring("lagrassa");
  for (const std::string text : {"0", "1", "u", "X", "u*X^2 + X + 1", "X^3 + u*X"}) {
    const auto f = P(s, text);
    EXPECT_EQ(P(s, format_poly(s, f)), f) << text;
  }
  EXPECT_EQ(format_poly(s, P(s, "1 + u*X")), "u*X + 1");
  EXPECT_EQ(format_poly(s, P(s, "X + X")), "X");
  EXPECT_EQ(format_poly(s, P(s, "u*X + X")), "u*X");
}

TEST(Polynomial, MultivariateAndLaurentGrammar) {
  const auto s = builtin_semiring("boolean");
  const PolyShape two{2, false};
  const auto f = P(s, "X1^2*X2 + X2", two);
  EXPECT_EQ(f.term_count(), 2U);
  EXPECT_EQ(format_poly(s, f), "X1^2*X2 + X2");
  EXPECT_THROW(P(s, "X + 1", two), parse_error);
  EXPECT_THROW(P(s, "X3", two), parse_error);
  EXPECT_THROW(P(s, "X^-1"), parse_error);
  const PolyShape laurent{1, true};
  const auto g = P(s, "X^-1", laurent);
  EXPECT_EQ(poly_mul(s, g, P(s, "X", laurent)), P(s, "1", laurent));
}

TEST(Polynomial, ParseErrors) {
  const auto s = builtin_semiring("lagrassa");
  EXPECT_THROW(P(s, ""), parse_error);
  EXPECT_THROW(P(s, "v*X"), parse_error);
  EXPECT_THROW(P(s, "u + "), parse_error);
  EXPECT_THROW(P(s, "X^a"), parse_error);
  const auto m = regular_semimodule(s);
  EXPECT_NO_THROW(parse_poly("u*X", m));
}

TEST(Polynomial, ProductMatchesDenseConvolution) {
  for (const auto& name : {"lagrassa", "primal2", "ideal:6", "powerset_primal:2"}) {
    const auto s = builtin_semiring(name);
    const auto polys = all_polynomials(s, 2);
    for (const auto& f : polys)
      for (const auto& g : polys) {
        const auto prod = poly_mul(s, f, g);
        EXPECT_EQ(oracle::dense_of(prod, s.zero()),
                  oracle::mul(s, oracle::dense_of(f, s.zero()), oracle::dense_of(g, s.zero())))
            << name;
      }
  }
}

TEST(Polynomial, ScalarActionMatchesDenseConvolution) {
  const auto s = builtin_semiring("product(boolean,boolean)");
  const auto m = builtin_semimodule(s, "projection:1");
  const auto fs = all_polynomials(s, 2);
  const auto gs = all_polynomials(m, 2);
  for (const auto& f : fs)
    for (const auto& g : gs)
      EXPECT_EQ(oracle::dense_of(scalar_action(m, f, g), m.zero()),
                oracle::act(m, oracle::dense_of(f, s.zero()), oracle::dense_of(g, m.zero())));
}

TEST(Polynomial, ContentMatchesOracle) {
  const auto s = builtin_semiring("ideal:12");
  for (const auto& f : all_polynomials(s, 1))
    EXPECT_EQ(oracle::to_set(content(s, f)), oracle::content(s, oracle::dense_of(f, s.zero())));
}

TEST(Polynomial, AllPolynomialsEnumeratesDistinctCoefficientVectors) {
  const auto s = builtin_semiring("primal2");
  const auto polys = all_polynomials(s, 3);
  EXPECT_EQ(polys.size(), 81U);
  std::set<std::string> seen;
  for (const auto& f : polys) seen.insert(format_poly(s, f));
  EXPECT_EQ(seen.size(), 81U);
}

TEST(Polynomial, RandomPolynomialIsSeedDeterministic) {
  const auto s = builtin_semiring("ideal:12");
  const PolyShape shape{2, true};
  std::mt19937_64 a(7);
  std::mt19937_64 b(7);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_polynomial(s, shape, -2, 2, 4, a);
    const auto g = random_polynomial(s, shape, -2, 2, 4, b);
    EXPECT_EQ(f, g);
    for (const auto& t : f.terms())
      for (int v = 0; v < 2; ++v) {
        EXPECT_GE(t.exp[v], -2);
        EXPECT_LE(t.exp[v], 2);
      }
  }
}

TEST(Polynomial, ArithmeticLaws) {
  const auto s = builtin_semiring("lagrassa");
  const auto polys = all_polynomials(s, 1);
  for (const auto& f : polys)
    for (const auto& g : polys) {
      EXPECT_EQ(poly_mul(s, f, g), poly_mul(s, g, f));
      for (const auto& h : polys)
        EXPECT_EQ(poly_mul(s, f, poly_add(s, g, h)), poly_add(s, poly_mul(s, f, g), poly_mul(s, f, h)));
    }
}

TEST(Polynomial, JsonRoundTrip) {
  const auto s = builtin_semiring("lagrassa");
  const PolyShape shape{2, true};
  const auto f = P(s, "u*X1^-1*X2 + X2^2 + 1", shape);
  const json j = poly_to_json(s, f);
  EXPECT_EQ(poly_from_json(json::parse(j.dump()), s, shape), f);
  EXPECT_EQ(poly_from_json(json(format_poly(s, f)), s, shape), f);
  EXPECT_THROW(poly_from_json(json::array({json{{"exp", {1}}, {"coeff", "u"}}}), s, shape), structural_error);
  EXPECT_THROW(poly_from_json(json::array({json{{"exp", {1, 0}}, {"coeff", "w"}}}), s, shape), parse_error);
}

// The worked LaGrassa computation, reproduced exactly.
TEST(Content, LaGrassaWeakContentFailure) {
  const auto s = builtin_semiring("lagrassa");
  const Elem u = *s.find("u");
  const auto f = P(s, "1 + u*X");
  const auto g = P(s, "u + X");
  const auto fg = poly_mul(s, f, g);
  EXPECT_EQ(fg, P(s, "u + u*X + u*X^2"));
  const ElementSet zero_u(3, {s.zero(), u});
  EXPECT_EQ(content(s, fg).members(), zero_u);
  const auto chk = weak_content_pair_check(s, f, g);
  EXPECT_TRUE(chk.cfcg.is_whole());
  EXPECT_EQ(chk.radical.members(), zero_u);
  EXPECT_FALSE(chk.holds);
  EXPECT_EQ(chk.failed_inclusion, 2);
}

TEST(Content, WeakContentHoldsOverWeakGaussianSemirings) {
  for (const auto& name : {"boolean", "primal2", "ideal:6", "powerset_primal:2"}) {
    const auto s = builtin_semiring(name);
    const auto polys = all_polynomials(s, 2);
    for (const auto& f : polys)
      for (const auto& g : polys) ASSERT_TRUE(weak_content_pair_check(s, f, g).holds) << name;
  }
}

TEST(DedekindMertens, BooleanExponentZero) {
  const auto s = builtin_semiring("boolean");
  const auto r = dedekind_mertens_exponent(s, P(s, "1 + X"), P(s, "X"), 8);
  ASSERT_TRUE(r.exponent.has_value());
  EXPECT_EQ(*r.exponent, 0U);
}

TEST(DedekindMertens, WitnessOnNonSubtractiveIdealIsAbsentForAll) {
  const auto s = builtin_semiring("powerset_primal:2");
  const auto bad = first_non_subtractive(s, enumerate_ideals(s));
  ASSERT_TRUE(bad.has_value());
  const auto v = *subtractive_violation(s, *bad);
  const auto f = Polynomial::dense(s, {s.one(), s.one()});
  const auto g = Polynomial::dense(s, {v.first, v.second, v.first});
  const auto r = dedekind_mertens_exponent(s, f, g, 64);
  EXPECT_FALSE(r.exponent.has_value());
  EXPECT_TRUE(r.absent_for_all);
  EXPECT_LE(r.examined, 2U);
}

TEST(DedekindMertens, ExponentSatisfiesFormulaByBruteForce) {
  const auto s = builtin_semiring("ideal:8");
  const auto polys = all_polynomials(s, 2);
  for (const auto& f : polys)
    for (const auto& g : polys) {
      const auto r = dedekind_mertens_exponent(s, f, g, 16);
      ASSERT_TRUE(r.exponent.has_value());
      const auto cf = content(s, f);
      const auto lhs = ideal_product(s, ideal_power(s, cf, *r.exponent + 1), content(s, g));
      const auto rhs = ideal_product(s, ideal_power(s, cf, *r.exponent), content(s, poly_mul(s, f, g)));
      EXPECT_EQ(lhs, rhs);
    }
}
