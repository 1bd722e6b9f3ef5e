#include <gtest/gtest.h>

#include <complex>

#include "mmvp/adomian.hpp"
#include "mmvp/problems.hpp"
#include "support/oracles.hpp"

namespace mmvp {
namespace {

using cld = std::complex<long double>;

std::vector<ExpPoly> case1_partials() {
  auto problem = traveling_wave_problem(1, -1);
  std::vector<ExpPoly> seed{decaying_seed(problem, QuadCoeff(1, problem.s()), 1)};
  return run_recursion(problem, seed, 6).iterates;
}

TEST(Adomian, CaseOneLowOrderPolynomials) {
  Rational s = 1;
  auto spec = parse_nonlinearity(kTravelingWaveNonlinearity, {{"a1", 1}}, s);
  auto partials = case1_partials();
  EXPECT_EQ(adomian_polynomial(spec, partials, 0), ExpPoly::monomial(QuadCoeff(-2, s), 0, -2));
  EXPECT_EQ(adomian_polynomial(spec, partials, 1), ExpPoly::monomial(QuadCoeff(make_rational(3, 2), s), 0, -3));
}

TEST(Adomian, LinearNonlinearityIsTheOperator) {
  auto spec = parse_nonlinearity("U2", {}, 0);
  std::vector<ExpPoly> partials{ExpPoly::monomial(QuadCoeff(1, 0), 2, 0)};
  EXPECT_EQ(adomian_polynomial(spec, partials, 0), ExpPoly::constant(2, 0));
}

TEST(Adomian, CaseThreeSeedPolynomial) {
  auto problem = shifted_polynomial_problem(1, 0, 0);
  std::vector<ExpPoly> partials{polynomial_seed(0, 1)};
  EXPECT_EQ(adomian_polynomial(problem.nonlinearity(), partials, 0),
            ExpPoly::monomial(QuadCoeff(-6, 0), 2, 0));
}

TEST(Adomian, ErrorsOnShortInputAndHighDegree) {
  auto spec = parse_nonlinearity("U0*U1", {}, 0);
  std::vector<ExpPoly> one{ExpPoly::xi(0)};
  EXPECT_THROW(adomian_via_definition(spec, one, 2), std::invalid_argument);
  auto quartic = parse_nonlinearity("U0^4", {}, 0);
  EXPECT_THROW(adomian_via_convolution(quartic, one, 0), std::invalid_argument);
  EXPECT_NO_THROW(adomian_via_definition(quartic, one, 0));
}

// sum_l U_l^(d)(xi) eps^l for a complex eps.
cld eps_series(const std::vector<ExpPoly>& partials, unsigned d, long double xi, long double lam, cld eps) {
  cld acc = 0, p = 1;
  for (const auto& u : partials) {
    acc += p * evaluate(differentiate(u, d), xi, lam);
    p *= eps;
  }
  return acc;
}

TEST(AdomianOracle, ContourCoefficientsMatchCaseOne) {
  auto partials = case1_partials();
  auto spec = parse_nonlinearity(kTravelingWaveNonlinearity, {{"a1", 1}}, 1);
  auto series = adomian_via_definition(spec, partials, 6);
  for (long double xi : {-0.5L, 0.0L, 0.8L, 2.0L}) {
    auto g = [&](cld eps) {
      cld u0 = eps_series(partials, 0, xi, 1, eps), u1 = eps_series(partials, 1, xi, 1, eps),
          u2 = eps_series(partials, 2, xi, 1, eps);
      return -(u1 * u1 + u0 * u2);
    };
    for (unsigned k = 0; k <= 6; ++k) {
      long double want = testing::taylor_coefficient(g, k, 32);
      long double got = evaluate(series.polys[k], xi, 1);
      EXPECT_NEAR(static_cast<double>(got), static_cast<double>(want), 1e-12 * std::max(1.0L, std::abs(want)))
          << "k=" << k << " xi=" << static_cast<double>(xi);
    }
  }
}

class AdomianProperties : public ::testing::TestWithParam<int> {};

TEST_P(AdomianProperties, RoutesAgree) {
  testing::Generator gen(500 + GetParam());
  Rational s = GetParam() % 2 ? Rational(0) : Rational(2);
  auto spec = parse_nonlinearity("U0*U0*U1 - 2*U3 + U2*U2 + 3*U0", {}, s);
  std::vector<ExpPoly> partials;
  for (int i = 0; i < 5; ++i) partials.push_back(gen.exp_poly(s, 3, 2, 1));
  auto a = adomian_via_definition(spec, partials, 4);
  auto b = adomian_via_convolution(spec, partials, 4);
  ASSERT_EQ(a.polys.size(), 5u);
  for (unsigned k = 0; k <= 4; ++k) EXPECT_EQ(a.polys[k], b.polys[k]) << "k=" << k;
}

TEST_P(AdomianProperties, DependsOnlyOnLowerPartials) {
  testing::Generator gen(600 + GetParam());
  Rational s = 1;
  auto spec = parse_nonlinearity("U0*U1*U2 + U1*U1", {}, s);
  std::vector<ExpPoly> partials;
  for (int i = 0; i < 4; ++i) partials.push_back(gen.exp_poly(s, 3, 2, 1));
  auto before = adomian_polynomial(spec, partials, 2);
  partials[3] = gen.exp_poly(s, 3, 2, 1) + ExpPoly::xi(s);
  EXPECT_EQ(adomian_polynomial(spec, partials, 2), before);
}

TEST_P(AdomianProperties, HomogeneousScaling) {
  testing::Generator gen(700 + GetParam());
  Rational s = 0;
  auto spec = parse_nonlinearity("U0*U0*U2 - U1*U1*U1", {}, s);
  Rational c = gen.rational();
  if (c == 0) c = 2;
  Rational mu = gen.rational();
  std::vector<ExpPoly> partials, scaled, graded;
  Rational mup = 1;
  for (int i = 0; i < 4; ++i) {
    partials.push_back(gen.exp_poly(s, 3, 3, 0));
    scaled.push_back(c * partials.back());
    graded.push_back(mup * partials.back());
    mup *= mu;
  }
  Rational c3 = c * c * c, muk = 1;
  for (unsigned k = 0; k <= 3; ++k) {
    ExpPoly ak = adomian_polynomial(spec, partials, k);
    EXPECT_EQ(adomian_polynomial(spec, scaled, k), c3 * ak);
    EXPECT_EQ(adomian_polynomial(spec, graded, k), muk * ak);
    muk *= mu;
  }
}

INSTANTIATE_TEST_SUITE_P(Generated, AdomianProperties, ::testing::Range(0, 20));

// For xi >= 0, |U_k^(d)| <= (k+1)^(d+1) / 12^k. The truncated sum misses the
// products U_i U_j with i, j <= K and i + j > K, which bounds the error.
long double case1_truncation_bound(unsigned k_max) {
  long double b = 0;
  for (unsigned i = 0; i <= k_max; ++i) {
    for (unsigned j = 0; j <= k_max; ++j) {
      if (i + j <= k_max) continue;
      long double a = i + 1, c = j + 1;
      b += (a * a * c * c + a * c * c * c) / std::pow(12.0L, static_cast<long double>(i + j));
    }
  }
  return b;
}

TEST(AdomianSum, TruncationErrorWithinAnalyticBound) {
  auto problem = traveling_wave_problem(1, -1);
  std::vector<ExpPoly> seed{decaying_seed(problem, QuadCoeff(1, problem.s()), 1)};
  auto series = run_recursion(problem, seed, 10);
  std::vector<long double> xs{0.0L, 0.5L, 1.0L, 3.0L};
  long double previous = INFINITY;
  for (unsigned k : {2u, 4u, 6u, 8u, 10u}) {
    long double e = verify_adomian_sum(problem.nonlinearity(), series.iterates, k, xs);
    EXPECT_LE(e, case1_truncation_bound(k)) << "K=" << k;
    EXPECT_LT(e, previous) << "K=" << k;
    previous = e;
  }
}

TEST(AdomianSum, ExactForLinearNonlinearity) {
  auto spec = parse_nonlinearity("U2 - 3*U0", {}, 0);
  std::vector<ExpPoly> partials{ExpPoly::xi(0), ExpPoly::monomial(QuadCoeff(1, 0), 3, 0)};
  std::vector<long double> xs{-1.0L, 0.5L, 2.0L};
  EXPECT_LT(verify_adomian_sum(spec, partials, 1, xs), 1e-15L);
}

}  // namespace
}  // namespace mmvp
