#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mmvp/closed_form.hpp"
#include "mmvp/function_spec.hpp"
#include "mmvp/precision.hpp"

namespace mmvp {

/// Sampling plane: (x, t) at fixed y, or (y, t) at fixed x.
enum class GridPlane { XT, YT };

std::string_view plane_name(GridPlane p);  // "xt" / "yt"

struct GridSpec {
  GridPlane plane = GridPlane::XT;
  double fixed = 0;  ///< y for XT, x for YT
  double axis_min = -20;
  double axis_max = 20;
  unsigned axis_points = 81;
  double t_min = -10;
  double t_max = 10;
  unsigned t_points = 41;
};

/// u(x, y, t) = U(xi) with xi = -I(t)/sqrt(a1) + sqrt(a1) x + c2 y - c1 and
/// I(t) = int_0^t {a1 (alpha + b) + c2^2 delta - a2}.
struct FieldConfig {
  std::string id;
  FunctionSpec alpha;
  FunctionSpec delta;
  double b = 0;
  double a1 = 1;
  double a2 = 0;
  double c1 = 0;
  double c2 = 0;
  ClosedForm closed_form;
  GridSpec grid;
};

/// Throws std::invalid_argument for inconsistent parameters (a1 <= 0, empty
/// grid, closed form built for different a1/a2).
void validate(const FieldConfig& cfg);

template <class T>
T phase_integral(const FieldConfig& cfg, T t) {
  const T a1 = cfg.a1;
  const T c2 = cfg.c2;
  return a1 * (cfg.alpha.integral(t) + T(cfg.b) * t) + c2 * c2 * cfg.delta.integral(t) - T(cfg.a2) * t;
}

/// Same integral through adaptive quadrature of the integrand.
double phase_integral_quadrature(const FieldConfig& cfg, double t);

template <class T>
T xi_phase(const FieldConfig& cfg, T x, T y, T t) {
  using std::sqrt;
  const T root = sqrt(T(cfg.a1));
  return -phase_integral<T>(cfg, t) / root + root * x + T(cfg.c2) * y - T(cfg.c1);
}

template <class T>
T field_value(const FieldConfig& cfg, T x, T y, T t) {
  return evaluate_jet<T>(cfg.closed_form, xi_phase<T>(cfg, x, y, t))[0];
}

struct FieldGrid {
  GridPlane plane = GridPlane::XT;
  std::vector<double> axis1;  ///< x or y
  std::vector<double> axis2;  ///< t
  std::vector<double> u;      ///< row-major: u[i * axis2.size() + j]

  double at(std::size_t i, std::size_t j) const { return u[i * axis2.size() + j]; }
};

/// Evaluates the grid, in parallel when more than one thread is allowed.
/// Throws ValidityError naming the grid location of a pole.
FieldGrid field_sample(const FieldConfig& cfg);

/// Worker count: MMVP_THREADS if set and positive, else hardware concurrency.
unsigned worker_threads();

/// Central-difference residual of
///   u_tx + u_x^2 + u u_xx + u_xxxx + (alpha + b) u_xx + delta u_yy
/// with the same step h in every direction, evaluated in quad precision.
double pde_residual(const FieldConfig& cfg, std::array<double, 3> point, double h);

struct ConvergencePoint {
  std::array<double, 3> point{};
  std::vector<double> residuals;  ///< one per step
  std::vector<double> orders;     ///< log(r_i / r_{i+1}) / log(h_i / h_{i+1})
};

struct ConvergenceReport {
  std::vector<double> steps;
  std::vector<ConvergencePoint> points;
  double min_order = 0;
};

/// n_points interior points of the configured grid drawn from a seeded
/// generator, kept a margin away from the window edges.
std::vector<std::array<double, 3>> interior_points(const FieldConfig& cfg, unsigned n_points, std::uint64_t seed);

ConvergenceReport residual_convergence(const FieldConfig& cfg, const std::vector<std::array<double, 3>>& points,
                                       const std::vector<double>& steps);

/// Built-in figure configurations: fig1a, fig1b, fig2a, fig2b, fig3a, fig3b.
FieldConfig figure_preset(std::string_view id);
std::vector<std::string> figure_preset_names();

}  // namespace mmvp
