#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "mmvp/wavefield.hpp"
#include "support/oracles.hpp"

namespace mmvp {
namespace {

TEST(Phase, FigureOneOffset) {
  auto cfg = figure_preset("fig1a");
  EXPECT_NEAR(xi_phase(cfg, 0.0, 1.0, 0.0), -0.2, 1e-15);
  EXPECT_EQ(phase_integral(cfg, 0.0), 0.0);
}

TEST(Phase, AnalyticIntegralMatchesQuadrature) {
  for (const auto& name : figure_preset_names()) {
    auto cfg = figure_preset(name);
    for (double t : {-10.0, -3.3, 0.5, 7.0, 10.0}) {
      double analytic = phase_integral(cfg, t);
      EXPECT_NEAR(phase_integral_quadrature(cfg, t), analytic, 1e-12 * std::max(1.0, std::abs(analytic)))
          << name << " t=" << t;
    }
  }
}

TEST(Phase, HandWrittenIntegrandForFigureOne) {
  auto cfg = figure_preset("fig1a");
  // a1 (alpha + b) + c2^2 delta - a2 with the fig1a profiles written out.
  auto integrand = [](double t) {
    double alpha = -5 * std::cos(0.6 * t + 12);
    double delta = 2 / std::cosh(0.1 * t) - 0.1;
    return 0.3 * (alpha + 0.8) + 0.09 * delta + 0.04;
  };
  for (double t : {1.0, 4.0, 10.0}) {
    EXPECT_NEAR(phase_integral(cfg, t), testing::adaptive_simpson(integrand, 0, t, 1e-14), 1e-11);
  }
}

TEST(Phase, AffineInTheConstantCoefficient) {
  auto cfg = figure_preset("fig2b");
  auto shifted = cfg;
  shifted.b += 0.25;
  for (double t : {-2.0, 1.5}) {
    EXPECT_NEAR(phase_integral(shifted, t) - phase_integral(cfg, t), cfg.a1 * 0.25 * t, 1e-13);
  }
}

FieldConfig constant_field() {
  FieldConfig cfg;
  cfg.id = "constant";
  cfg.a1 = 1;
  cfg.alpha = FunctionSpec({BasisTerm::cos(1, 1, 0)});
  cfg.closed_form = ClosedForm::zero(0.7);
  return cfg;
}

TEST(Field, ConstantSolutionHasZeroResidual) {
  auto cfg = constant_field();
  EXPECT_EQ(pde_residual(cfg, {0.3, -1.0, 2.0}, 1e-2), 0.0);
  auto grid = field_sample(cfg);
  for (double u : grid.u) EXPECT_EQ(u, 0.7);
}

TEST(Field, SinglePointGrid) {
  auto cfg = figure_preset("fig1a");
  cfg.grid.axis_points = 1;
  cfg.grid.t_points = 1;
  cfg.grid.axis_min = cfg.grid.axis_max = 2;
  cfg.grid.t_min = cfg.grid.t_max = -1;
  auto grid = field_sample(cfg);
  ASSERT_EQ(grid.u.size(), 1u);
  EXPECT_DOUBLE_EQ(grid.at(0, 0), field_value(cfg, 2.0, 1.0, -1.0));
}

TEST(Field, GridLayoutAndPlanes) {
  auto cfg = figure_preset("fig1b");
  cfg.grid.axis_points = 5;
  cfg.grid.t_points = 3;
  auto grid = field_sample(cfg);
  ASSERT_EQ(grid.axis1.size(), 5u);
  ASSERT_EQ(grid.axis2.size(), 3u);
  EXPECT_EQ(grid.plane, GridPlane::YT);
  // YT plane: x fixed, axis1 is y.
  EXPECT_DOUBLE_EQ(grid.at(4, 2), field_value(cfg, cfg.grid.fixed, grid.axis1[4], grid.axis2[2]));
}

TEST(Field, ThreadCountDoesNotChangeValues) {
  auto cfg = figure_preset("fig3a");
  setenv("MMVP_THREADS", "1", 1);
  auto serial = field_sample(cfg);
  setenv("MMVP_THREADS", "4", 1);
  auto parallel = field_sample(cfg);
  unsetenv("MMVP_THREADS");
  EXPECT_EQ(serial.u, parallel.u);
}

TEST(Field, HyperbolicFieldsStayBounded) {
  for (const char* name : {"fig1a", "fig1b"}) {
    auto cfg = figure_preset(name);
    double peak = -3 * cfg.a2 / cfg.a1;
    auto grid = field_sample(cfg);
    for (double u : grid.u) {
      ASSERT_TRUE(std::isfinite(u));
      EXPECT_GE(u, 0.0);
      EXPECT_LE(u, peak * (1 + 1e-12));
    }
  }
}

TEST(Field, PoleIsReportedWithLocation) {
  FieldConfig cfg;
  cfg.a1 = 1;
  cfg.a2 = -1;
  cfg.closed_form = ClosedForm::csch2(1, -1, -12);  // xi = x - t, pole on the diagonal
  try {
    field_sample(cfg);
    FAIL() << "expected a pole";
  } catch (const ValidityError& e) {
    EXPECT_NE(std::string(e.what()).find("csch"), std::string::npos) << e.what();
  }
}

TEST(Field, ValidationErrors) {
  auto cfg = figure_preset("fig1a");
  cfg.a2 = -0.05;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = figure_preset("fig1a");
  cfg.grid.t_points = 0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = figure_preset("fig1a");
  cfg.a1 = 0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  EXPECT_THROW(figure_preset("fig9"), std::invalid_argument);
}

TEST(Residual, SecondOrderConvergence) {
  for (const char* name : {"fig1b", "fig3b"}) {
    auto cfg = figure_preset(name);
    auto pts = interior_points(cfg, 3, 7);
    auto report = residual_convergence(cfg, pts, {1e-2, 5e-3, 2.5e-3});
    EXPECT_GE(report.min_order, 1.9) << name;
    for (const auto& p : report.points) {
      EXPECT_LT(p.residuals.back(), p.residuals.front());
    }
  }
}

TEST(Residual, InteriorPointsAreSeededAndInside) {
  auto cfg = figure_preset("fig2a");
  auto a = interior_points(cfg, 10, 42), b = interior_points(cfg, 10, 42);
  EXPECT_EQ(a, b);
  for (const auto& p : a) {
    EXPECT_GT(p[0], cfg.grid.axis_min);
    EXPECT_LT(p[0], cfg.grid.axis_max);
    EXPECT_EQ(p[1], cfg.grid.fixed);
    EXPECT_GT(p[2], cfg.grid.t_min);
    EXPECT_LT(p[2], cfg.grid.t_max);
  }
}

}  // namespace
}  // namespace mmvp
