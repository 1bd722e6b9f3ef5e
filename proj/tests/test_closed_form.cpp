#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mmvp/closed_form.hpp"
#include "mmvp/problems.hpp"
#include "support/oracles.hpp"

namespace mmvp {
namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / (n - 1));
  return v;
}

TEST(ClosedForm, ExpRationalAtOrigin) {
  auto cf = ClosedForm::exp_rational(1, -1, 1);
  EXPECT_NEAR(evaluate_closed_form(cf, 0), 144.0 / 169.0, 1e-15);
}

TEST(ClosedForm, ExpRationalMatchesDirectFormula) {
  for (double c : {1.0, -1.0, 3.5}) {
    auto cf = ClosedForm::exp_rational(2, -3, c);
    double lambda = std::sqrt(3.0) / 2;
    for (double xi : {-4.0, -1.0, 0.5, 2.0, 6.0}) {
      double e = std::exp(lambda * xi);
      double want = 144 * 9 * c * e / std::pow(-36 * e - 2 * c, 2);
      EXPECT_NEAR(evaluate_closed_form(cf, xi), want, 1e-13 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(ClosedForm, ResidualsOfEveryFamily) {
  auto xs = linspace(-2, 3, 25);
  for (const auto& cf : {ClosedForm::exp_rational(1, -1, 1), ClosedForm::sech2(1, -1, 1),
                         ClosedForm::exp_rational(1, -1, -1), ClosedForm::csch2(1, -1, -1),
                         ClosedForm::sech2(2, -0.5, 3, -1), ClosedForm::zero(0.3)}) {
    EXPECT_LT(ode_residual(cf, xs), 1e-10) << to_string(cf);
  }
  auto ell = linspace(-10, 10, 25);
  for (const auto& cf : {ClosedForm::sn2(1, 0, 0.3, 0.6), ClosedForm::cn2(1, 0, 0.3, 0.6),
                         ClosedForm::dn2(1, 0, 0.3, 0.6), ClosedForm::sn2(1.5, -0.4, 0.25, 0.8, 0.2)}) {
    EXPECT_LT(ode_residual(cf, ell), 1e-8) << to_string(cf);
  }
  auto trig = linspace(0.5, 2.5, 25);
  for (const auto& cf : {ClosedForm::csc2(1, 1, 12), ClosedForm::sec2(1, 1, -12), ClosedForm::algebraic(1)}) {
    EXPECT_LT(ode_residual(cf, trig), 1e-10) << to_string(cf);
  }
}

TEST(ClosedForm, HyperbolicRecasts) {
  auto xs = linspace(-2, 3, 25);
  EXPECT_LT(equivalence_check(ClosedForm::exp_rational(1, -1, 1), ClosedForm::sech2(1, -1, 1), xs), 1e-12);
  EXPECT_LT(equivalence_check(ClosedForm::exp_rational(1, -1, -1), ClosedForm::csch2(1, -1, -1), xs), 1e-12);
  EXPECT_LT(equivalence_check(ClosedForm::exp_rational(2, -5, 0.7, -1), ClosedForm::sech2(2, -5, 0.7, -1), xs),
            1e-12);
}

TEST(ClosedForm, EllipticRecasts) {
  auto xs = linspace(-10, 10, 25);
  auto sn = ClosedForm::sn2(1, 0, 0.3, 0.6), cn = ClosedForm::cn2(1, 0, 0.3, 0.6), dn = ClosedForm::dn2(1, 0, 0.3, 0.6);
  EXPECT_LT(equivalence_check(sn, cn, xs), 1e-10);
  EXPECT_LT(equivalence_check(sn, dn, xs), 1e-10);
  EXPECT_LT(equivalence_check(cn, dn, xs), 1e-10);
}

TEST(ClosedForm, DerivativesAgreeWithFiniteDifferences) {
  const double h = 1e-4;
  for (const auto& cf : {ClosedForm::exp_rational(1, -1, 1), ClosedForm::csch2(1, -1, -1),
                         ClosedForm::sn2(1, 0, 0.3, 0.6), ClosedForm::dn2(1, -0.2, 0.4, 0.5, 0.1),
                         ClosedForm::csc2(1, 1, 12), ClosedForm::algebraic(2)}) {
    for (double xi : {0.6, 1.3, 2.1}) {
      for (unsigned n = 1; n <= 4; ++n) {
        double fd = (evaluate_closed_form(cf, xi + h, n - 1) - evaluate_closed_form(cf, xi - h, n - 1)) / (2 * h);
        double exact = evaluate_closed_form(cf, xi, n);
        EXPECT_NEAR(fd, exact, 1e-6 * std::max(1.0, std::abs(exact))) << to_string(cf) << " n=" << n;
      }
    }
  }
}

TEST(ClosedForm, ValidityRegions) {
  EXPECT_THROW(ClosedForm::sech2(1, -1, -1), ValidityError);
  EXPECT_THROW(ClosedForm::csch2(1, -1, 1), ValidityError);
  EXPECT_THROW(ClosedForm::sech2(1, 1, 1), ValidityError);
  EXPECT_THROW(ClosedForm::csc2(1, -1, 12), ValidityError);
  ClosedForm alg = ClosedForm::algebraic(1);
  alg.a2 = 0.5;
  EXPECT_THROW(require_valid(alg), ValidityError);
  EXPECT_FALSE(validity_issue(alg).empty());
  EXPECT_TRUE(validity_issue(ClosedForm::algebraic(1)).empty());
}

TEST(ClosedForm, PolesAreReported) {
  auto cf = ClosedForm::exp_rational(1, -1, -12);  // t = 1 at xi = 0
  EXPECT_THROW(evaluate_closed_form(cf, 0), ValidityError);
  EXPECT_THROW(evaluate_closed_form(ClosedForm::algebraic(1), 0), ValidityError);
}

TEST(ClosedForm, TrigonometricImaginaryParts) {
  for (double xi : {0.5, 1.0, 2.5}) {
    auto a = evaluate_complex(ClosedForm::csc2(1, 1, 12), xi);
    EXPECT_LT(std::abs(a.imag()), 1e-12);
    EXPECT_NEAR(a.real(), evaluate_closed_form(ClosedForm::csc2(1, 1, 12), xi), 1e-12);
    auto b = evaluate_complex(ClosedForm::sec2(1, 1, -12), xi);
    EXPECT_LT(std::abs(b.imag()), 1e-12);
  }
  // Generic seed constant: complex-valued, the real path refuses.
  auto generic = ClosedForm::csc2(1, 1, 5);
  EXPECT_GT(std::abs(evaluate_complex(generic, 1.0).imag()), 1e-3);
  EXPECT_THROW(evaluate_closed_form(generic, 1.0), ValidityError);
}

TEST(LambdaShift, ResidualsAndComposition) {
  auto base = ClosedForm::exp_rational(1, -1, 1);
  auto xs = linspace(-3, 3, 25);
  testing::Generator gen(31);
  for (int i = 0; i < 8; ++i) {
    double a = gen.real(-0.5, 0.45), b = gen.real(-0.5, 0.45);
    auto shifted = lambda_shift(base, a);
    EXPECT_LT(ode_residual(shifted, xs), 1e-10);
    EXPECT_LT(equivalence_check(lambda_shift(shifted, b), lambda_shift(base, a + b), xs), 1e-12);
    EXPECT_NEAR(evaluate_closed_form(shifted, 200.0), a, 1e-12);
  }
  EXPECT_THROW(lambda_shift(base, 2.0), ValidityError);
}

TEST(GeneratingFunction, SumsTheGeneralTerm) {
  auto problem = traveling_wave_problem(1, -1);
  std::vector<ExpPoly> seed{decaying_seed(problem, QuadCoeff(1, 1), 1)};
  auto series = run_recursion(problem, seed, 20);
  auto cf = sum_generating_function(detect_general_term(series));
  EXPECT_EQ(cf.family, Family::ExpRational);
  EXPECT_DOUBLE_EQ(cf.a1, 1);
  EXPECT_DOUBLE_EQ(cf.a2, -1);
  EXPECT_DOUBLE_EQ(cf.c, 1);
  ExpPoly sum = partial_sum(series);
  for (double xi : linspace(0, 4, 17)) {
    EXPECT_NEAR(static_cast<double>(evaluate(sum, xi, 1)), evaluate_closed_form(cf, xi), 1e-12);
  }
}

TEST(Case3Seed, ExactMapAndRoundTrip) {
  auto seed = case3_seed_from_theta(1, 0, 0, make_rational(3, 10), make_rational(3, 5));
  // 4 (9/100)(34/25) and -12 (81/10000)(9/25)
  EXPECT_EQ(seed.v0, make_rational(1224, 2500));
  EXPECT_EQ(seed.v1, make_rational(-8748, 250000));
  auto cf = ClosedForm::sn2_from_seed(1, 0, 0, seed.v0.get_d(), seed.v1.get_d());
  EXPECT_NEAR(cf.theta, 0.3, 1e-14);
  EXPECT_NEAR(cf.modulus, 0.6, 1e-14);
  EXPECT_NEAR(evaluate_closed_form(cf, 0), seed.v0.get_d(), 1e-15);
  EXPECT_NEAR(evaluate_closed_form(cf, 0, 2), 2 * seed.v1.get_d(), 1e-14);
}

TEST(Case3Seed, UnsupportedBranch) {
  // v0 = Lambda = a2 = 0 makes kappa imaginary.
  EXPECT_THROW(ClosedForm::sn2_from_seed(1, 0, 0, 0, 1), ValidityError);
}

TEST(Maclaurin, CoefficientsSumToTheFunction) {
  auto cf = ClosedForm::cn2(1, -0.1, 0.4, 0.7, 0.25);
  auto c = maclaurin_coefficients(cf, 16);
  for (std::size_t n = 1; n < c.size(); n += 2) EXPECT_EQ(c[n], 0.0);
  for (double xi : {0.05, 0.2}) {
    double acc = 0, p = 1;
    for (double cn : c) {
      acc += cn * p;
      p *= xi;
    }
    EXPECT_NEAR(acc + cf.shift, evaluate_closed_form(cf, xi), 1e-14);
  }
}

TEST(Maclaurin, SeriesMatchesSn2) {
  for (auto [th, k] : {std::pair{3, 6}, std::pair{25, 80}}) {
    Rational theta = make_rational(th, th == 3 ? 10 : 100), kk = make_rational(k, k == 6 ? 10 : 100);
    auto seed = case3_seed_from_theta(1, 0, 0, theta, kk);
    auto problem = shifted_polynomial_problem(1, 0, 0);
    std::vector<ExpPoly> s{polynomial_seed(seed.v0, seed.v1)};
    auto series = run_recursion(problem, s, 4);
    auto cf = ClosedForm::sn2(1, 0, theta.get_d(), kk.get_d());
    auto report = maclaurin_match(series, cf, 10);
    EXPECT_EQ(report.compared_degree, 10u);
    EXPECT_LT(report.max_coeff_error, 1e-9);
    ExpPoly sum = partial_sum(series);
    EXPECT_EQ(sum.coefficient(0, 0), QuadCoeff(seed.v0, 0));
    EXPECT_EQ(sum.coefficient(2, 0), QuadCoeff(seed.v1, 0));
  }
}

TEST(FamilyNames, RoundTrip) {
  for (Family f : {Family::Zero, Family::ExpRational, Family::Sech2, Family::Csch2, Family::Csc2, Family::Sec2,
                   Family::Algebraic, Family::Sn2, Family::Cn2, Family::Dn2}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_THROW(parse_family("TANH"), ParseError);
}

}  // namespace
}  // namespace mmvp
