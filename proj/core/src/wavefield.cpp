#include "mmvp/wavefield.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace mmvp {

std::string_view plane_name(GridPlane p) { return p == GridPlane::XT ? "xt" : "yt"; }

void validate(const FieldConfig& cfg) {
  if (!(cfg.a1 > 0)) throw std::invalid_argument("field: a1 must be positive");
  if (cfg.grid.axis_points == 0 || cfg.grid.t_points == 0) throw std::invalid_argument("field: empty grid");
  if (cfg.grid.axis_max < cfg.grid.axis_min || cfg.grid.t_max < cfg.grid.t_min) {
    throw std::invalid_argument("field: grid range is reversed");
  }
  const auto& cf = cfg.closed_form;
  if (cf.family != Family::Zero && (cf.a1 != cfg.a1 || cf.a2 != cfg.a2)) {
    throw std::invalid_argument("field: closed form was built for different a1, a2");
  }
  require_valid(cf);
}

double phase_integral_quadrature(const FieldConfig& cfg, double t) {
  FunctionSpec integrand;
  for (const auto& b : cfg.alpha.terms()) {
    auto s = b;
    s.amplitude *= cfg.a1;
    integrand += s;
  }
  for (const auto& b : cfg.delta.terms()) {
    auto s = b;
    s.amplitude *= cfg.c2 * cfg.c2;
    integrand += s;
  }
  integrand += BasisTerm::constant(cfg.a1 * cfg.b - cfg.a2);
  return integrate_numerically(integrand, t);
}

unsigned worker_threads() {
  if (const char* env = std::getenv("MMVP_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::vector<double> linspace(double lo, double hi, unsigned n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (unsigned i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

}  // namespace

FieldGrid field_sample(const FieldConfig& cfg) {
  validate(cfg);
  FieldGrid g;
  g.plane = cfg.grid.plane;
  g.axis1 = linspace(cfg.grid.axis_min, cfg.grid.axis_max, cfg.grid.axis_points);
  g.axis2 = linspace(cfg.grid.t_min, cfg.grid.t_max, cfg.grid.t_points);
  g.u.assign(g.axis1.size() * g.axis2.size(), 0.0);

  const std::size_t rows = g.axis1.size();
  const unsigned nthreads = std::min<unsigned>(worker_threads(), static_cast<unsigned>(rows));
  std::exception_ptr failure;
  std::size_t failed_row = rows;
  std::mutex mu;

  auto work = [&](unsigned tid) {
    for (std::size_t i = tid; i < rows; i += nthreads) {
      try {
        for (std::size_t j = 0; j < g.axis2.size(); ++j) {
          double a = g.axis1[i], t = g.axis2[j];
          double x = cfg.grid.plane == GridPlane::XT ? a : cfg.grid.fixed;
          double y = cfg.grid.plane == GridPlane::XT ? cfg.grid.fixed : a;
          try {
            g.u[i * g.axis2.size() + j] = field_value<double>(cfg, x, y, t);
          } catch (const ValidityError& e) {
            throw ValidityError(std::string(e.what()) + " at (axis1=" + std::to_string(a) +
                                ", t=" + std::to_string(t) + ")");
          }
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < failed_row) {
          failed_row = i;
          failure = std::current_exception();
        }
        return;
      }
    }
  };

  if (nthreads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned tid = 0; tid < nthreads; ++tid) pool.emplace_back(work, tid);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return g;
}

double pde_residual(const FieldConfig& cfg, std::array<double, 3> point, double h_in) {
  using R = HighReal;
  const R x = point[0], y = point[1], t = point[2], h = h_in;
  auto u = [&](R dx, R dy, R dt) { return field_value<R>(cfg, x + dx, y + dy, t + dt); };

  const R u0 = u(0, 0, 0);
  const R xp1 = u(h, 0, 0), xm1 = u(-h, 0, 0);
  const R xp2 = u(2 * h, 0, 0), xm2 = u(-2 * h, 0, 0);
  const R yp1 = u(0, h, 0), ym1 = u(0, -h, 0);

  const R h2 = h * h;
  const R ux = (xp1 - xm1) / (2 * h);
  const R uxx = (xp1 - 2 * u0 + xm1) / h2;
  const R uyy = (yp1 - 2 * u0 + ym1) / h2;
  const R uxxxx = (xp2 - 4 * xp1 + 6 * u0 - 4 * xm1 + xm2) / (h2 * h2);
  const R utx = (u(h, 0, h) - u(h, 0, -h) - u(-h, 0, h) + u(-h, 0, -h)) / (4 * h2);

  const R alpha = cfg.alpha.value<R>(t);
  const R delta = cfg.delta.value<R>(t);
  const R r = utx + ux * ux + u0 * uxx + uxxxx + (alpha + R(cfg.b)) * uxx + delta * uyy;
  return static_cast<double>(r);
}

std::vector<std::array<double, 3>> interior_points(const FieldConfig& cfg, unsigned n_points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& g = cfg.grid;
  const double margin_a = 0.1 * (g.axis_max - g.axis_min);
  const double margin_t = 0.1 * (g.t_max - g.t_min);
  std::uniform_real_distribution<double> da(g.axis_min + margin_a, g.axis_max - margin_a);
  std::uniform_real_distribution<double> dt(g.t_min + margin_t, g.t_max - margin_t);
  std::vector<std::array<double, 3>> pts;
  pts.reserve(n_points);
  for (unsigned i = 0; i < n_points; ++i) {
    double a = da(rng), t = dt(rng);
    if (g.plane == GridPlane::XT) {
      pts.push_back({a, g.fixed, t});
    } else {
      pts.push_back({g.fixed, a, t});
    }
  }
  return pts;
}

ConvergenceReport residual_convergence(const FieldConfig& cfg, const std::vector<std::array<double, 3>>& points,
                                       const std::vector<double>& steps) {
  validate(cfg);
  ConvergenceReport rep;
  rep.steps = steps;
  rep.min_order = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    ConvergencePoint cp;
    cp.point = p;
    for (double h : steps) cp.residuals.push_back(std::abs(pde_residual(cfg, p, h)));
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
      // Both residuals exactly zero: the stencil reproduces the field exactly.
      double order = cp.residuals[i] == 0 && cp.residuals[i + 1] == 0
                         ? std::numeric_limits<double>::infinity()
                         : std::log(cp.residuals[i] / cp.residuals[i + 1]) / std::log(steps[i] / steps[i + 1]);
      cp.orders.push_back(order);
      rep.min_order = std::min(rep.min_order, std::isnan(order) ? -std::numeric_limits<double>::infinity() : order);
    }
    rep.points.push_back(std::move(cp));
  }
  if (rep.points.empty() || steps.size() < 2) rep.min_order = 0;
  return rep;
}

namespace {

FieldConfig base_config(std::string id, FunctionSpec alpha, FunctionSpec delta, double a1, double a2, double c1,
                        double c2, double b, GridPlane plane) {
  FieldConfig cfg;
  cfg.id = std::move(id);
  cfg.alpha = std::move(alpha);
  cfg.delta = std::move(delta);
  cfg.a1 = a1;
  cfg.a2 = a2;
  cfg.c1 = c1;
  cfg.c2 = c2;
  cfg.b = b;
  cfg.grid.plane = plane;
  cfg.grid.fixed = 1;
  return cfg;
}

}  // namespace

std::vector<std::string> figure_preset_names() { return {"fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b"}; }

FieldConfig figure_preset(std::string_view id) {
  using B = BasisTerm;
  if (id == "fig1a") {
    auto cfg = base_config("fig1a", FunctionSpec({B::cos(-5, 0.6, 12)}),
                           FunctionSpec({B::sech(2, 0.1), B::constant(-0.1)}), 0.3, -0.04, 0.5, 0.3, 0.8, GridPlane::XT);
    cfg.closed_form = ClosedForm::exp_rational(cfg.a1, cfg.a2, 4);
    return cfg;
  }
  if (id == "fig1b") {
    auto cfg = base_config("fig1b", FunctionSpec({B::cos(-5, 5, 12)}),
                           FunctionSpec({B::sech(-5, 0.4), B::monomial(2.5, 1), B::constant(5)}), 0.8, -0.5, 0.5, 0.3,
                           0.8, GridPlane::YT);
    cfg.closed_form = ClosedForm::exp_rational(cfg.a1, cfg.a2, 8);
    return cfg;
  }
  if (id == "fig2a") {
    auto cfg = base_config("fig2a", FunctionSpec({B::chirp_cos(-25, 0.5, 0)}), FunctionSpec({B::sech(32, -0.5)}), 0.203,
                           -0.1, 0.5, 0.1, 0.8, GridPlane::XT);
    cfg.closed_form = lambda_shift(ClosedForm::exp_rational(cfg.a1, cfg.a2, 1), -0.5);
    return cfg;
  }
  if (id == "fig2b") {
    auto cfg = base_config("fig2b", FunctionSpec({B::cos(-8, 1.5, 12)}),
                           FunctionSpec({B::sech(-10, 1.4), B::monomial(2.5, 1), B::constant(1)}), 0.34, -0.12, 0.5,
                           0.06, 0.8, GridPlane::YT);
    cfg.closed_form = lambda_shift(ClosedForm::exp_rational(cfg.a1, cfg.a2, 1), -0.5);
    return cfg;
  }
  if (id == "fig3a") {
    auto cfg = base_config("fig3a", FunctionSpec({B::cos(-5, 0.6, 12)}),
                           FunctionSpec({B::sech(2, 0.1), B::constant(-0.1)}), 0.3, -0.04, 0.5, 0.3, 0.8, GridPlane::XT);
    cfg.closed_form = ClosedForm::sn2(cfg.a1, cfg.a2, 0.25, 0.8, 0.6);
    return cfg;
  }
  if (id == "fig3b") {
    auto cfg = base_config("fig3b", FunctionSpec({B::cos(-5, 5, 12)}),
                           FunctionSpec({B::sech(-5, 0.4), B::monomial(7, 1), B::constant(5)}), 0.8, -0.5, 0.5, 0.3, 0.8,
                           GridPlane::YT);
    cfg.closed_form = ClosedForm::sn2(cfg.a1, cfg.a2, 0.3, 0.8, 0.6);
    return cfg;
  }
  throw std::invalid_argument("unknown figure preset '" + std::string(id) + "'");
}

}  // namespace mmvp
