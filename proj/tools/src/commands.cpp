#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "mmvp/adomian.hpp"
#include "mmvp/cli/app.hpp"
#include "mmvp/errors.hpp"
#include "mmvp/problems.hpp"

namespace mmvp::cli {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

Json real_or_label(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

std::string string_field(const Json& j, const char* key, std::string fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_string()) throw ParseError(std::string("'") + key + "' must be a string");
  return it->get<std::string>();
}

unsigned unsigned_field(const Json& j, const char* key, unsigned fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_integer() || it->get<long long>() < 0) {
    throw ParseError(std::string("'") + key + "' must be a nonnegative integer");
  }
  return it->get<unsigned>();
}

double real_field(const Json& j, const char* key, double fallback) {
  auto it = j.find(key);
  return it == j.end() ? fallback : real_from_json(*it);
}

bool bool_field(const Json& j, const char* key, bool fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw ParseError(std::string("'") + key + "' must be a boolean");
  return it->get<bool>();
}

// ---- recursion set-up shared by iterate and adomian ------------------------

SeriesSolution run_from_config(const Json& cfg, const Overrides& ov) {
  require_keys(cfg,
               {"id", "mode", "a1", "a2", "Lambda", "nonlinearity", "parameters", "seed", "scheme", "k_max",
                "require_general_term"},
               "iterate config");
  const std::string mode = string_field(cfg, "mode", "exponential");
  const Rational a1 = rational_from_json(cfg.value("a1", Json("1")));
  const Rational a2 = rational_from_json(cfg.value("a2", Json("-1")));
  const Rational shift = rational_from_json(cfg.value("Lambda", Json("0")));
  const unsigned k_max = ov.k_max.value_or(unsigned_field(cfg, "k_max", 8));
  const std::string scheme = string_field(cfg, "scheme", "p-half");
  if (scheme != "p-half" && scheme != "p-one") throw ParseError("scheme must be 'p-half' or 'p-one'");
  if (a1 <= 0) throw ParseError("a1 must be positive");

  std::map<std::string, Rational> params{{"a1", a1}, {"a2", a2}, {"L", shift}};
  if (auto it = cfg.find("parameters"); it != cfg.end()) {
    if (!it->is_object()) throw ParseError("'parameters' must be an object");
    for (const auto& [name, value] : it->items()) params[name] = rational_from_json(value);
  }

  const Json seed_cfg = cfg.value("seed", Json::object());
  ExpPoly seed0;
  std::string seed_desc;
  ProblemSpec spec = [&] {
    if (mode == "exponential") {
      if (a2 >= 0) throw ParseError("exponential mode requires a2 < 0");
      const Rational s = -a2 / (a1 * a1);
      const std::string text = string_field(cfg, "nonlinearity", std::string(kTravelingWaveNonlinearity));
      return ProblemSpec::exponential(a1, a2, parse_nonlinearity(text, params, s));
    }
    if (mode == "polynomial") {
      const std::string text = string_field(cfg, "nonlinearity", std::string(kShiftedPolynomialNonlinearity));
      return ProblemSpec::polynomial(a1, a2, parse_nonlinearity(text, params, Rational(0)));
    }
    throw ParseError("mode must be 'exponential' or 'polynomial'");
  }();

  if (spec.mode() == OperatorMode::Exponential) {
    require_keys(seed_cfg, {"c", "direction"}, "seed");
    const Rational c = rational_from_json(seed_cfg.value("c", Json("1")));
    const int dir = seed_cfg.value("direction", 1);
    if (dir != 1 && dir != -1) throw ParseError("seed direction must be +1 or -1");
    seed0 = decaying_seed(spec, QuadCoeff(c, spec.s()), dir);
    seed_desc = "U0 = " + to_string(c) + "*exp(" + (dir > 0 ? "-" : "+") + "lambda*xi), U(" +
                (dir > 0 ? "+" : "-") + "inf) = 0";
  } else {
    require_keys(seed_cfg, {"v0", "v1", "theta", "k"}, "seed");
    Rational v0, v1;
    if (seed_cfg.contains("theta") || seed_cfg.contains("k")) {
      if (seed_cfg.contains("v0") || seed_cfg.contains("v1")) throw ParseError("seed: give either v0/v1 or theta/k");
      auto s = case3_seed_from_theta(a1, a2, shift, rational_from_json(seed_cfg.value("theta", Json("0"))),
                                     rational_from_json(seed_cfg.value("k", Json("0"))));
      v0 = s.v0;
      v1 = s.v1;
    } else {
      v0 = rational_from_json(seed_cfg.value("v0", Json("0")));
      v1 = rational_from_json(seed_cfg.value("v1", Json("1")));
    }
    seed0 = polynomial_seed(v0, v1);
    seed_desc = "V0 = " + to_string(v1) + "*xi^2 + " + to_string(v0);
  }

  std::vector<ExpPoly> seed{seed0};
  if (scheme == "p-one") {
    seed.emplace_back(spec.s());
    seed_desc += ", U1 = 0";
  }
  return run_recursion(spec, seed, k_max, seed_desc);
}

std::vector<double> samples_from(const Json& cfg) {
  auto it = cfg.find("samples");
  if (it == cfg.end()) {
    std::vector<double> xs(25);
    for (int i = 0; i < 25; ++i) xs[i] = -3 + 6.0 * i / 24;
    return xs;
  }
  std::vector<double> xs;
  if (it->is_array()) {
    for (const auto& v : *it) xs.push_back(real_from_json(v));
  } else {
    require_keys(*it, {"min", "max", "count"}, "samples");
    const double lo = real_field(*it, "min", -3), hi = real_field(*it, "max", 3);
    const unsigned n = unsigned_field(*it, "count", 25);
    for (unsigned i = 0; i < n; ++i) xs.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  }
  if (xs.empty()) throw ParseError("samples must not be empty");
  return xs;
}

bool is_elliptic(Family f) { return f == Family::Sn2 || f == Family::Cn2 || f == Family::Dn2; }

bool comparable(const ClosedForm& a, const ClosedForm& b) {
  if (a.a1 != b.a1 || a.a2 != b.a2 || a.shift != b.shift) return false;
  if (is_elliptic(a.family) && is_elliptic(b.family)) return a.theta == b.theta && a.modulus == b.modulus;
  if (is_elliptic(a.family) || is_elliptic(b.family)) return false;
  if (a.family == Family::Zero || b.family == Family::Zero) return false;
  if (a.family == Family::Algebraic || b.family == Family::Algebraic) return false;
  return a.c == b.c && a.direction == b.direction;
}

struct CheckList {
  Json items = Json::array();
  bool pass = true;

  void add(const std::string& name, double value, double tol) {
    const bool ok = value <= tol;
    pass = pass && ok;
    items.push_back({{"name", name}, {"value", real_or_label(value)}, {"tolerance", tol}, {"pass", ok}});
  }
  void fail(const std::string& name, const std::string& error) {
    pass = false;
    items.push_back({{"name", name}, {"error", error}, {"pass", false}});
  }
  template <class F>
  void run(const std::string& name, double tol, F&& f) {
    try {
      add(name, f(), tol);
    } catch (const ValidityError& e) {
      fail(name, e.what());
    }
  }
};

}  // namespace

CommandResult cmd_iterate(const Json& cfg, const Overrides& ov) {
  const SeriesSolution series = run_from_config(cfg, ov);
  CommandResult res;
  Json& r = res.report;
  r["id"] = string_field(cfg, "id", "iterate");
  r["series"] = to_json(series);

  Json coeffs = Json::array();
  for (const auto& u : series.iterates) {
    if (u.is_monomial() && u.terms().begin()->first.power == 0) {
      coeffs.push_back(to_string(u.terms().begin()->second));
    } else if (u.is_zero()) {
      coeffs.push_back("0");
    } else {
      coeffs.push_back(to_string(u));
    }
  }
  r["coefficients"] = std::move(coeffs);

  try {
    const GeneralTerm gt = detect_general_term(series);
    r["general_term"] = to_json(gt);
    try {
      r["generating_function"] = to_json(sum_generating_function(gt));
    } catch (const std::exception& e) {
      r["generating_function"] = nullptr;
    }
    r["pattern"] = "ok";
  } catch (const PatternMismatch& e) {
    r["general_term"] = nullptr;
    r["pattern"] = std::string("mismatch: ") + e.what();
    if (bool_field(cfg, "require_general_term", false)) res.exit_code = kToleranceFailure;
  }
  return res;
}

CommandResult cmd_adomian(const Json& cfg, const Overrides& ov) {
  const SeriesSolution series = run_from_config(cfg, ov);
  const auto& spec = series.problem.nonlinearity();
  const unsigned k = static_cast<unsigned>(series.iterates.size() - 1);
  const auto def = adomian_via_definition(spec, series.iterates, k);
  CommandResult res;
  Json& r = res.report;
  r["id"] = string_field(cfg, "id", "adomian");
  r["nonlinearity"] = to_string(spec);
  Json polys = Json::array();
  for (const auto& a : def.polys) polys.push_back({{"text", to_string(a)}, {"exp_poly", to_json(a)}});
  r["polynomials"] = std::move(polys);
  if (spec.max_degree() <= 3) {
    const auto conv = adomian_via_convolution(spec, series.iterates, k);
    const bool agree = conv.polys == def.polys;
    r["routes_agree"] = agree;
    if (!agree) res.exit_code = kToleranceFailure;
  } else {
    r["routes_agree"] = nullptr;
  }
  return res;
}

CommandResult cmd_verify(const Json& cfg, const Overrides& ov) {
  require_keys(cfg,
               {"id", "forms", "samples", "residual_tolerance", "equivalence_tolerance", "imaginary_tolerance",
                "lambda_shifts", "equivalences", "maclaurin"},
               "verify config");
  std::vector<ClosedForm> forms;
  if (!cfg.contains("forms") || !cfg.at("forms").is_array() || cfg.at("forms").empty()) {
    throw ParseError("verify config needs a non-empty 'forms' list");
  }
  for (const auto& f : cfg.at("forms")) forms.push_back(closed_form_from_json(f));
  const auto xs = samples_from(cfg);
  const double res_tol = ov.tolerance.value_or(real_field(cfg, "residual_tolerance", 1e-10));
  const double eq_tol = ov.tolerance.value_or(real_field(cfg, "equivalence_tolerance", 1e-12));
  const double im_tol = ov.tolerance.value_or(real_field(cfg, "imaginary_tolerance", 1e-12));

  CheckList checks;
  auto label = [&](std::size_t i) { return std::to_string(i) + ":" + std::string(family_name(forms[i].family)); };

  for (std::size_t i = 0; i < forms.size(); ++i) {
    checks.run("residual " + label(i), res_tol, [&] { return ode_residual(forms[i], xs); });
    if (forms[i].family == Family::Csc2 || forms[i].family == Family::Sec2) {
      checks.run("imaginary " + label(i), im_tol, [&] {
        double worst = 0;
        for (double x : xs) worst = std::max(worst, std::abs(evaluate_complex(forms[i], x).imag()));
        return worst;
      });
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (auto it = cfg.find("equivalences"); it != cfg.end()) {
    for (const auto& p : *it) {
      if (!p.is_array() || p.size() != 2) throw ParseError("equivalences must be [i, j] pairs");
      std::size_t i = p[0].get<std::size_t>(), j = p[1].get<std::size_t>();
      if (i >= forms.size() || j >= forms.size()) throw ParseError("equivalence index out of range");
      pairs.emplace_back(i, j);
    }
  } else {
    for (std::size_t i = 0; i < forms.size(); ++i) {
      for (std::size_t j = i + 1; j < forms.size(); ++j) {
        if (comparable(forms[i], forms[j])) pairs.emplace_back(i, j);
      }
    }
  }
  for (auto [i, j] : pairs) {
    checks.run("equivalence " + label(i) + " vs " + label(j), eq_tol,
               [&] { return equivalence_check(forms[i], forms[j], xs); });
  }

  if (auto it = cfg.find("lambda_shifts"); it != cfg.end()) {
    for (const auto& v : *it) {
      const double shift = real_from_json(v);
      checks.run("lambda shift " + format_real(shift) + " of " + label(0), res_tol,
                 [&] { return ode_residual(lambda_shift(forms[0], shift), xs); });
    }
  }

  Json mac_report = nullptr;
  if (auto it = cfg.find("maclaurin"); it != cfg.end()) {
    const Json& m = *it;
    require_keys(m, {"a1", "a2", "Lambda", "theta", "k", "k_max", "max_degree", "tolerance"}, "maclaurin");
    const Rational a1 = rational_from_json(m.value("a1", Json("1")));
    const Rational a2 = rational_from_json(m.value("a2", Json("0")));
    const Rational shift = rational_from_json(m.value("Lambda", Json("0")));
    const Rational theta = rational_from_json(m.value("theta", Json("0.3")));
    const Rational k = rational_from_json(m.value("k", Json("0.6")));
    const unsigned k_max = ov.k_max.value_or(unsigned_field(m, "k_max", 4));
    const unsigned max_degree = unsigned_field(m, "max_degree", 2 * k_max + 2);
    const double tol = ov.tolerance.value_or(real_field(m, "tolerance", 1e-9));
    const auto seed = case3_seed_from_theta(a1, a2, shift, theta, k);
    const auto spec = shifted_polynomial_problem(a1, a2, shift);
    const ExpPoly v0 = polynomial_seed(seed.v0, seed.v1);
    const auto series = run_recursion(spec, std::span<const ExpPoly>(&v0, 1), k_max);
    auto d = [](const Rational& r) { return static_cast<double>(to_long_double(r)); };
    const auto cf = ClosedForm::sn2(d(a1), d(a2), d(theta), d(k), d(shift));
    const auto rep = maclaurin_match(series, cf, max_degree);
    checks.add("maclaurin through degree " + std::to_string(rep.compared_degree), rep.max_coeff_error, tol);
    mac_report = {{"v0", to_string(seed.v0)},
                  {"v1", to_string(seed.v1)},
                  {"compared_degree", rep.compared_degree},
                  {"series_coefficients", rep.series_coefficients},
                  {"closed_form_coefficients", rep.closed_form_coefficients}};
  }

  CommandResult res;
  Json& r = res.report;
  r["id"] = string_field(cfg, "id", "verify");
  Json fj = Json::array();
  for (const auto& f : forms) fj.push_back(to_json(f));
  r["forms"] = std::move(fj);
  r["samples"] = xs.size();
  r["checks"] = std::move(checks.items);
  if (!mac_report.is_null()) r["maclaurin"] = std::move(mac_report);
  r["pass"] = checks.pass;
  res.exit_code = checks.pass ? kPass : kToleranceFailure;
  return res;
}

CommandResult cmd_field(const Json& cfg, const Overrides& ov) {
  require_keys(cfg, {"field", "steps", "residual_points", "seed", "min_order"}, "field config");
  if (!cfg.contains("field")) throw ParseError("field config needs a 'field' object");
  const FieldConfig fc = field_config_from_json(cfg.at("field"));
  std::vector<double> steps{1e-2, 5e-3, 2.5e-3};
  if (auto it = cfg.find("steps"); it != cfg.end()) {
    steps.clear();
    for (const auto& v : *it) steps.push_back(real_from_json(v));
  }
  for (double h : steps) {
    if (!(h > 0)) throw ParseError("steps must be positive");
  }
  const unsigned n_points = unsigned_field(cfg, "residual_points", 10);
  const auto seed = static_cast<std::uint64_t>(unsigned_field(cfg, "seed", 20240601));
  const double min_order = ov.tolerance.value_or(real_field(cfg, "min_order", 1.9));

  const FieldGrid grid = field_sample(fc);
  const auto pts = interior_points(fc, n_points, seed);
  const auto conv = residual_convergence(fc, pts, steps);

  std::ostringstream csv;
  csv << "axis1,axis2,u\n";
  double umin = INFINITY, umax = -INFINITY;
  for (std::size_t i = 0; i < grid.axis1.size(); ++i) {
    for (std::size_t j = 0; j < grid.axis2.size(); ++j) {
      const double u = grid.at(i, j);
      umin = std::min(umin, u);
      umax = std::max(umax, u);
      csv << format_real(grid.axis1[i]) << ',' << format_real(grid.axis2[j]) << ',' << format_real(u) << '\n';
    }
  }

  Json points = Json::array();
  for (const auto& p : conv.points) {
    Json orders = Json::array();
    for (double o : p.orders) orders.push_back(real_or_label(o));
    points.push_back({{"point", p.point}, {"residuals", p.residuals}, {"orders", std::move(orders)}});
  }
  const bool pass = conv.points.empty() || conv.min_order >= min_order;

  CommandResult res;
  const std::string stem = "field_" + fc.id + "_" + std::string(plane_name(fc.grid.plane));
  Json& r = res.report;
  r["id"] = fc.id;
  r["csv"] = stem + ".csv";
  r["config"] = to_json(fc);
  r["grid"] = {{"axis1_points", grid.axis1.size()}, {"axis2_points", grid.axis2.size()}};
  r["u_min"] = umin;
  r["u_max"] = umax;
  r["residual"] = {{"steps", conv.steps},
                   {"points", std::move(points)},
                   {"min_order", real_or_label(conv.min_order)},
                   {"required_order", min_order},
                   {"pass", pass}};
  r["pass"] = pass;
  res.files.emplace_back(stem + ".csv", csv.str());
  res.files.emplace_back(stem + ".json", r.dump(2) + "\n");
  res.exit_code = pass ? kPass : kToleranceFailure;
  return res;
}

}  // namespace mmvp::cli
