#include <gtest/gtest.h>

#include <cmath>

#include "mmvp/errors.hpp"
#include "mmvp/exp_poly.hpp"
#include "support/oracles.hpp"

namespace mmvp {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

TEST(RationalParse, AcceptsIntegersFractionsDecimalsAndExponents) {
  EXPECT_EQ(parse_rational("3"), q(3));
  EXPECT_EQ(parse_rational("-1/6"), q(-1, 6));
  EXPECT_EQ(parse_rational("0.034992"), q(34992, 1000000));
  EXPECT_EQ(parse_rational("2.5e-3"), q(1, 400));
  EXPECT_EQ(parse_rational("-.5"), q(-1, 2));
  EXPECT_EQ(parse_rational("1E2"), q(100));
  // Leading zeros are decimal, never octal.
  EXPECT_EQ(parse_rational("010/3"), q(10, 3));
  EXPECT_EQ(parse_rational("0.08"), q(2, 25));
}

TEST(RationalParse, RejectsGarbage) {
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1.2.3"), ParseError);
  EXPECT_THROW(parse_rational("1e99999999"), ParseError);
}

TEST(RationalConvert, LongDoubleIsCorrectlySigned) {
  EXPECT_DOUBLE_EQ(static_cast<double>(to_long_double(q(-1, 6))), -1.0 / 6);
  EXPECT_DOUBLE_EQ(static_cast<double>(to_long_double(q(144, 169))), 144.0 / 169);
  EXPECT_EQ(to_long_double(q(0)), 0.0L);
  Rational big(mpz_class("123456789012345678901234567890"), mpz_class(7));
  EXPECT_NEAR(static_cast<double>(to_long_double(big)), 1.7636684144620811e28, 1e13);
}

TEST(QuadCoeff, ConjugateProductGivesNorm) {
  QuadCoeff a(1, 1, 2), b(1, -1, 2);
  EXPECT_EQ(a * b, QuadCoeff(-1, 2));
}

TEST(QuadCoeff, InverseAndNonInvertible) {
  Rational s = 3;
  QuadCoeff a(2, 5, s);
  EXPECT_EQ(a * a.inverse(), QuadCoeff(1, s));
  EXPECT_THROW(QuadCoeff(0, 0, s).inverse(), NotInvertible);
  // s = 1 is a perfect square: 1 + lambda has norm 0.
  EXPECT_THROW(QuadCoeff(1, 1, 1).inverse(), NotInvertible);
}

TEST(QuadCoeff, ContextMismatchThrows) {
  EXPECT_THROW(QuadCoeff(1, 1, 2) + QuadCoeff(1, 1, 3), ContextMismatch);
  EXPECT_THROW(QuadCoeff(1, 1, 0), std::invalid_argument);
}

TEST(ExpPolyRing, DifferenceOfSquares) {
  Rational s = 0;
  ExpPoly x = ExpPoly::xi(s), one = ExpPoly::constant(1, s);
  ExpPoly expected(s);
  expected.add_term(QuadCoeff(1, s), 2, 0);
  expected.add_term(QuadCoeff(-1, s), 0, 0);
  EXPECT_EQ((x + one) * (x - one), expected);
}

TEST(ExpPolyRing, LambdaConjugatesWithSTwo) {
  Rational s = 2;
  ExpPoly a = ExpPoly::constant(QuadCoeff(1, 1, s)), b = ExpPoly::constant(QuadCoeff(1, -1, s));
  EXPECT_EQ(a * b, ExpPoly::constant(-1, s));
}

TEST(ExpPolyRing, DivideByMonomialUsesInverseLambda) {
  Rational s = 1;
  ExpPoly num = ExpPoly::monomial(QuadCoeff(3, s), 2, 2);
  ExpPoly den = ExpPoly::monomial(QuadCoeff::lambda(s), 0, 2);
  EXPECT_EQ(num.divide_by_monomial(den), ExpPoly::monomial(QuadCoeff(0, 3, s), 2, 0));
}

TEST(ExpPolyRing, DivisionErrors) {
  Rational s = 1;
  ExpPoly num = ExpPoly::monomial(QuadCoeff(3, s), 2, 2);
  ExpPoly two_terms = ExpPoly::xi(s) + ExpPoly::constant(1, s);
  EXPECT_THROW(num.divide_by_monomial(two_terms), NotInvertible);
  EXPECT_THROW(num.divide_by_monomial(ExpPoly(s)), NotInvertible);
  EXPECT_THROW(num.divide_by_monomial(ExpPoly::monomial(QuadCoeff(1, 1, s), 0, 0)), NotInvertible);
  EXPECT_THROW(num + ExpPoly::xi(2), ContextMismatch);
}

TEST(ExpPolyRing, PolynomialModeRejectsRates) {
  EXPECT_THROW(ExpPoly::monomial(QuadCoeff(1, 0), 0, 1), std::invalid_argument);
}

TEST(ExpPolyCalculus, DifferentiateExamples) {
  Rational s = 5;
  ExpPoly f = ExpPoly::monomial(QuadCoeff(1, s), 2, 2);
  ExpPoly expected(s);
  expected.add_term(QuadCoeff(2, s), 1, 2);
  expected.add_term(QuadCoeff(0, 2, s), 2, 2);
  EXPECT_EQ(differentiate(f), expected);

  ExpPoly g = ExpPoly::monomial(QuadCoeff(7, s), 0, -1);
  EXPECT_EQ(differentiate(g), ExpPoly::monomial(QuadCoeff(0, -7, s), 0, -1));
  EXPECT_TRUE(differentiate(ExpPoly::constant(5, s)).is_zero());
  EXPECT_EQ(differentiate(f, 0), f);
}

TEST(ExpPolyCalculus, AntiderivativeExamples) {
  Rational s0 = 0;
  EXPECT_EQ(antiderivative(ExpPoly::xi(s0)), ExpPoly::monomial(QuadCoeff(q(1, 2), s0), 2, 0));

  Rational s = 1;
  ExpPoly e = ExpPoly::monomial(QuadCoeff(1, s), 0, 1);
  // 1/lambda = lambda/s, stored exactly.
  EXPECT_EQ(antiderivative(e), ExpPoly::monomial(QuadCoeff::lambda(s), 0, 1));

  ExpPoly xe = ExpPoly::monomial(QuadCoeff(1, s), 1, 1);
  ExpPoly got = antiderivative(xe);
  EXPECT_EQ(differentiate(got), xe);
  // Numerically (xi - 1) e^{xi} with lambda = 1.
  for (double x : {-1.0, 0.0, 0.5, 2.0}) {
    EXPECT_NEAR(static_cast<double>(evaluate(got, x, 1.0L)), (x - 1) * std::exp(x), 1e-14);
  }
}

TEST(ExpPolyEvaluate, Examples) {
  Rational s0 = 0;
  EXPECT_EQ(evaluate(2 * ExpPoly::xi(s0), 3, 0), 6.0L);
  Rational s = 1;
  EXPECT_NEAR(static_cast<double>(evaluate(ExpPoly::monomial(QuadCoeff(1, 1, s), 0, 1), 0, 1)), 2.0, 1e-18);
  ExpPoly u1 = ExpPoly::monomial(QuadCoeff(q(-1, 6), s), 0, -2);
  EXPECT_NEAR(static_cast<double>(evaluate(u1, 0, 1)), -1.0 / 6, 1e-18);
  EXPECT_THROW(evaluate(u1, 0, 1.1L), std::invalid_argument);
}

TEST(ExpPolyText, ReadableForm) {
  Rational s = 1;
  ExpPoly f = ExpPoly::monomial(QuadCoeff(q(-1, 6), s), 0, -2) + ExpPoly::monomial(QuadCoeff(1, s), 2, 0);
  EXPECT_EQ(to_string(f), "(-1/6)*exp(-2*lambda*xi) + (1)*xi^2");
  EXPECT_EQ(to_string(ExpPoly(s)), "0");
}

// ---- properties over generated values --------------------------------------

class ExpPolyProperties : public ::testing::TestWithParam<int> {};

TEST_P(ExpPolyProperties, RingAxioms) {
  testing::Generator gen(1000 + GetParam());
  for (Rational s : {Rational(0), Rational(1), Rational(2), q(4, 9)}) {
    ExpPoly a = gen.exp_poly(s), b = gen.exp_poly(s), c = gen.exp_poly(s);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_TRUE((a - a).terms().empty());
  }
}

TEST_P(ExpPolyProperties, AntiderivativeInvertsDerivative) {
  testing::Generator gen(2000 + GetParam());
  for (Rational s : {Rational(0), Rational(1), Rational(3), q(1, 4)}) {
    ExpPoly f = gen.exp_poly(s, 5, 4, 3);
    EXPECT_EQ(differentiate(antiderivative(f)), f);
  }
}

TEST_P(ExpPolyProperties, EvaluationIsARingHomomorphism) {
  testing::Generator gen(3000 + GetParam());
  Rational s = q(9, 4);
  long double lam = 1.5L;
  ExpPoly a = gen.exp_poly(s), b = gen.exp_poly(s);
  for (long double x : {-0.7L, 0.0L, 0.3L, 1.1L}) {
    long double ea = evaluate(a, x, lam), eb = evaluate(b, x, lam);
    long double scale = std::max(1.0L, std::abs(ea * eb));
    EXPECT_NEAR(static_cast<double>(evaluate(a * b, x, lam)), static_cast<double>(ea * eb),
                static_cast<double>(1e-10L * scale));
    EXPECT_NEAR(static_cast<double>(evaluate(a + b, x, lam)), static_cast<double>(ea + eb),
                static_cast<double>(1e-10L * std::max(1.0L, std::abs(ea) + std::abs(eb))));
  }
}

INSTANTIATE_TEST_SUITE_P(Generated, ExpPolyProperties, ::testing::Range(0, 25));

}  // namespace
}  // namespace mmvp
