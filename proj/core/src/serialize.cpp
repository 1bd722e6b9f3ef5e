#include "mmvp/serialize.hpp"

#include <algorithm>

#include "mmvp/errors.hpp"

namespace mmvp {

void require_keys(const Json& j, std::initializer_list<std::string_view> allowed, std::string_view where) {
  if (!j.is_object()) throw ParseError(std::string(where) + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError(std::string(where) + ": unknown key '" + key + "'");
    }
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw ParseError("expected a number or a numeric string, got " + j.dump());
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return static_cast<double>(to_long_double(parse_rational(j.get<std::string>())));
  throw ParseError("expected a number, got " + j.dump());
}

namespace {

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if constexpr (std::is_same_v<T, double>) {
    return real_from_json(*it);
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (!it->is_string()) throw ParseError(std::string("'") + key + "' must be a string");
    return it->template get<std::string>();
  } else {
    if (!it->is_number_integer()) throw ParseError(std::string("'") + key + "' must be an integer");
    return it->template get<T>();
  }
}

const Json& need(const Json& j, const char* key, std::string_view where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(where) + ": missing '" + key + "'");
  return *it;
}

std::string big(const mpz_class& z) { return z.get_str(); }

Rational ratio_of(const Json& num, const Json& den) {
  if (!num.is_string() || !den.is_string()) throw ParseError("integers must be decimal strings");
  Rational r;
  try {
    r = Rational(mpz_class(num.get<std::string>(), 10), mpz_class(den.get<std::string>(), 10));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad integer '" + num.get<std::string>() + "/" + den.get<std::string>() + "'");
  }
  if (r.get_den() == 0) throw ParseError("zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace

Json to_json(const ExpPoly& f) {
  Json out;
  out["context"] = {{"s_num", big(f.context().get_num())}, {"s_den", big(f.context().get_den())}};
  Json terms = Json::array();
  for (const auto& [key, c] : f.terms()) {
    terms.push_back({{"m", key.power},
                     {"n", key.rate},
                     {"p_num", big(c.p().get_num())},
                     {"p_den", big(c.p().get_den())},
                     {"q_num", big(c.q().get_num())},
                     {"q_den", big(c.q().get_den())}});
  }
  out["terms"] = std::move(terms);
  return out;
}

ExpPoly exp_poly_from_json(const Json& j) {
  require_keys(j, {"context", "terms"}, "exp_poly");
  const Json& ctx = need(j, "context", "exp_poly");
  require_keys(ctx, {"s_num", "s_den"}, "exp_poly.context");
  try {
    Rational s = ratio_of(need(ctx, "s_num", "context"), need(ctx, "s_den", "context"));
    ExpPoly f(s);
    for (const auto& t : need(j, "terms", "exp_poly")) {
      require_keys(t, {"m", "n", "p_num", "p_den", "q_num", "q_den"}, "exp_poly.term");
      QuadCoeff c(ratio_of(t.at("p_num"), t.at("p_den")), ratio_of(t.at("q_num"), t.at("q_den")), s);
      f.add_term(c, t.at("m").get<unsigned>(), t.at("n").get<int>());
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("exp_poly: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("exp_poly: ") + e.what());
  }
}

Json to_json(const SeriesSolution& s) {
  Json out;
  const auto& p = s.problem;
  out["mode"] = p.mode() == OperatorMode::Exponential ? "exponential" : "polynomial";
  out["a1"] = to_string(p.a1());
  out["a2"] = to_string(p.a2());
  out["nonlinearity"] = to_string(p.nonlinearity());
  out["scheme"] = s.scheme == Scheme::PHalf ? "p-half" : "p-one";
  out["seed"] = s.seed_description;
  Json its = Json::array();
  for (const auto& u : s.iterates) its.push_back(to_json(u));
  out["iterates"] = std::move(its);
  Json res = Json::array();
  for (const auto& r : s.resonant_terms) res.push_back({{"iterate", r.iterate}, {"m", r.key.power}, {"n", r.key.rate}});
  out["resonant_terms"] = std::move(res);
  return out;
}

SeriesSolution series_from_json(const Json& j) {
  require_keys(j, {"mode", "a1", "a2", "nonlinearity", "scheme", "seed", "iterates", "resonant_terms"}, "series");
  const std::string mode = get_or<std::string>(j, "mode", "");
  const Rational a1 = rational_from_json(need(j, "a1", "series"));
  const Rational a2 = rational_from_json(need(j, "a2", "series"));
  const std::string text = get_or<std::string>(j, "nonlinearity", "");
  ProblemSpec spec = [&] {
    if (mode == "exponential") {
      Rational s = -a2 / (a1 * a1);
      return ProblemSpec::exponential(a1, a2, parse_nonlinearity(text, {}, s));
    }
    if (mode == "polynomial") return ProblemSpec::polynomial(a1, a2, parse_nonlinearity(text, {}, Rational(0)));
    throw ParseError("series: mode must be 'exponential' or 'polynomial'");
  }();
  const std::string scheme = get_or<std::string>(j, "scheme", "p-half");
  if (scheme != "p-half" && scheme != "p-one") throw ParseError("series: unknown scheme '" + scheme + "'");
  SeriesSolution out{spec, scheme == "p-half" ? Scheme::PHalf : Scheme::POne, {},
                     get_or<std::string>(j, "seed", ""), {}};
  for (const auto& u : need(j, "iterates", "series")) {
    ExpPoly f = exp_poly_from_json(u);
    if (f.context() != spec.s()) throw ContextMismatch("series: iterate context differs from the problem");
    out.iterates.push_back(std::move(f));
  }
  if (auto it = j.find("resonant_terms"); it != j.end()) {
    for (const auto& r : *it) {
      require_keys(r, {"iterate", "m", "n"}, "series.resonant_terms");
      out.resonant_terms.push_back(
          ResonantTerm{r.at("iterate").get<unsigned>(), TermKey{r.at("n").get<int>(), r.at("m").get<unsigned>()}});
    }
  }
  return out;
}

Json to_json(const GeneralTerm& gt) {
  return {{"amplitude", to_string(gt.amplitude)},
          {"ratio", to_string(gt.ratio)},
          {"rate", gt.rate},
          {"amplitude_value", gt.amplitude_value()},
          {"ratio_value", gt.ratio_value()}};
}

Json to_json(const ClosedForm& cf) {
  Json out;
  out["family"] = std::string(family_name(cf.family));
  out["a1"] = cf.a1;
  out["a2"] = cf.a2;
  switch (cf.family) {
    case Family::Sn2:
    case Family::Cn2:
    case Family::Dn2:
      out["theta"] = cf.theta;
      out["k"] = cf.modulus;
      break;
    case Family::Zero:
    case Family::Algebraic:
      break;
    default:
      out["c"] = cf.c;
  }
  out["Lambda"] = cf.shift;
  out["direction"] = cf.direction;
  return out;
}

ClosedForm closed_form_from_json(const Json& j) {
  require_keys(j, {"family", "a1", "a2", "c", "Lambda", "theta", "k", "direction", "v0", "v1"}, "closed_form");
  const Family fam = parse_family(get_or<std::string>(j, "family", ""));
  const double a1 = get_or<double>(j, "a1", 1.0);
  const double a2 = get_or<double>(j, "a2", 0.0);
  const double c = get_or<double>(j, "c", 0.0);
  const double shift = get_or<double>(j, "Lambda", 0.0);
  const int dir = get_or<int>(j, "direction", 1);
  if (dir != 1 && dir != -1) throw ParseError("closed_form: direction must be +1 or -1");
  ClosedForm cf;
  switch (fam) {
    case Family::Zero:
      return ClosedForm::zero(shift);
    case Family::ExpRational:
      cf = ClosedForm::exp_rational(a1, a2 + a1 * shift, c, dir);
      break;
    case Family::Sech2:
      cf = ClosedForm::sech2(a1, a2 + a1 * shift, c, dir);
      break;
    case Family::Csch2:
      cf = ClosedForm::csch2(a1, a2 + a1 * shift, c, dir);
      break;
    case Family::Csc2:
      cf = ClosedForm::csc2(a1, a2 + a1 * shift, c, dir);
      break;
    case Family::Sec2:
      cf = ClosedForm::sec2(a1, a2 + a1 * shift, c, dir);
      break;
    case Family::Algebraic:
      cf = ClosedForm::algebraic(a1);
      cf.a2 = a2 + a1 * shift;
      require_valid(cf);
      break;
    case Family::Sn2:
    case Family::Cn2:
    case Family::Dn2: {
      if (j.contains("v0") || j.contains("v1")) {
        if (fam != Family::Sn2) throw ParseError("closed_form: seed constants are only accepted for SN2");
        return ClosedForm::sn2_from_seed(a1, a2, shift, get_or<double>(j, "v0", 0.0), get_or<double>(j, "v1", 0.0));
      }
      const double th = get_or<double>(j, "theta", 0.0);
      const double k = get_or<double>(j, "k", 0.0);
      if (fam == Family::Sn2) return ClosedForm::sn2(a1, a2, th, k, shift);
      if (fam == Family::Cn2) return ClosedForm::cn2(a1, a2, th, k, shift);
      return ClosedForm::dn2(a1, a2, th, k, shift);
    }
  }
  // Build at the effective a2, then restore the stored pair (a2, shift).
  cf.a2 = a2;
  cf.shift = shift;
  require_valid(cf);
  return cf;
}

Json to_json(const FunctionSpec& f) {
  Json out = Json::array();
  for (const auto& b : f.terms()) {
    switch (b.kind) {
      case BasisKind::Constant:
        out.push_back({{"kind", "constant"}, {"amplitude", b.amplitude}});
        break;
      case BasisKind::Power:
        out.push_back({{"kind", "power"}, {"amplitude", b.amplitude}, {"power", b.power}});
        break;
      case BasisKind::Cos:
        out.push_back({{"kind", "cos"}, {"amplitude", b.amplitude}, {"omega", b.rate}, {"phase", b.phase}});
        break;
      case BasisKind::Sech:
        out.push_back({{"kind", "sech"}, {"amplitude", b.amplitude}, {"beta", b.rate}});
        break;
      case BasisKind::ChirpCos:
        out.push_back({{"kind", "chirp_cos"}, {"amplitude", b.amplitude}, {"gamma", b.rate}, {"phase", b.phase}});
        break;
    }
  }
  return out;
}

FunctionSpec function_spec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("function spec: expected a list of terms");
  FunctionSpec f;
  for (const auto& t : j) {
    if (!t.is_object()) throw ParseError("function spec: each term must be an object");
    const std::string kind = get_or<std::string>(t, "kind", "");
    const double a = get_or<double>(t, "amplitude", 0.0);
    if (kind == "constant") {
      require_keys(t, {"kind", "amplitude"}, "constant term");
      f += BasisTerm::constant(a);
    } else if (kind == "power") {
      require_keys(t, {"kind", "amplitude", "power"}, "power term");
      int p = get_or<int>(t, "power", 0);
      if (p < 0) throw ParseError("power term: exponent must be nonnegative");
      f += BasisTerm::monomial(a, static_cast<unsigned>(p));
    } else if (kind == "cos") {
      require_keys(t, {"kind", "amplitude", "omega", "phase"}, "cos term");
      f += BasisTerm::cos(a, get_or<double>(t, "omega", 0.0), get_or<double>(t, "phase", 0.0));
    } else if (kind == "sech") {
      require_keys(t, {"kind", "amplitude", "beta"}, "sech term");
      f += BasisTerm::sech(a, get_or<double>(t, "beta", 0.0));
    } else if (kind == "chirp_cos") {
      require_keys(t, {"kind", "amplitude", "gamma", "phase"}, "chirp_cos term");
      f += BasisTerm::chirp_cos(a, get_or<double>(t, "gamma", 0.0), get_or<double>(t, "phase", 0.0));
    } else {
      throw ParseError("function spec: unknown term kind '" + kind + "'");
    }
  }
  return f;
}

Json to_json(const GridSpec& g) {
  return {{"plane", std::string(plane_name(g.plane))},
          {"fixed", g.fixed},
          {"axis_min", g.axis_min},
          {"axis_max", g.axis_max},
          {"axis_points", g.axis_points},
          {"t_min", g.t_min},
          {"t_max", g.t_max},
          {"t_points", g.t_points}};
}

GridSpec grid_from_json(const Json& j, GridSpec g) {
  require_keys(j, {"plane", "fixed", "axis_min", "axis_max", "axis_points", "t_min", "t_max", "t_points"}, "grid");
  if (auto it = j.find("plane"); it != j.end()) {
    const std::string p = it->is_string() ? it->get<std::string>() : "";
    if (p == "xt") {
      g.plane = GridPlane::XT;
    } else if (p == "yt") {
      g.plane = GridPlane::YT;
    } else {
      throw ParseError("grid: plane must be 'xt' or 'yt'");
    }
  }
  g.fixed = get_or<double>(j, "fixed", g.fixed);
  g.axis_min = get_or<double>(j, "axis_min", g.axis_min);
  g.axis_max = get_or<double>(j, "axis_max", g.axis_max);
  g.t_min = get_or<double>(j, "t_min", g.t_min);
  g.t_max = get_or<double>(j, "t_max", g.t_max);
  const int ap = get_or<int>(j, "axis_points", static_cast<int>(g.axis_points));
  const int tp = get_or<int>(j, "t_points", static_cast<int>(g.t_points));
  if (ap < 1 || tp < 1) throw ParseError("grid: point counts must be positive");
  g.axis_points = static_cast<unsigned>(ap);
  g.t_points = static_cast<unsigned>(tp);
  return g;
}

Json to_json(const FieldConfig& cfg) {
  return {{"id", cfg.id},
          {"alpha", to_json(cfg.alpha)},
          {"delta", to_json(cfg.delta)},
          {"b", cfg.b},
          {"a1", cfg.a1},
          {"a2", cfg.a2},
          {"c1", cfg.c1},
          {"c2", cfg.c2},
          {"closed_form", to_json(cfg.closed_form)},
          {"grid", to_json(cfg.grid)}};
}

FieldConfig field_config_from_json(const Json& j) {
  require_keys(j, {"id", "alpha", "delta", "b", "a1", "a2", "c1", "c2", "closed_form", "grid"}, "field");
  FieldConfig cfg;
  cfg.id = get_or<std::string>(j, "id", "custom");
  if (j.contains("alpha")) cfg.alpha = function_spec_from_json(j.at("alpha"));
  if (j.contains("delta")) cfg.delta = function_spec_from_json(j.at("delta"));
  cfg.b = get_or<double>(j, "b", 0.0);
  cfg.a1 = get_or<double>(j, "a1", 1.0);
  cfg.a2 = get_or<double>(j, "a2", 0.0);
  cfg.c1 = get_or<double>(j, "c1", 0.0);
  cfg.c2 = get_or<double>(j, "c2", 0.0);
  if (j.contains("closed_form")) {
    Json cf = j.at("closed_form");
    if (!cf.is_object()) throw ParseError("field: closed_form must be an object");
    if (!cf.contains("a1")) cf["a1"] = cfg.a1;
    if (!cf.contains("a2")) cf["a2"] = cfg.a2;
    cfg.closed_form = closed_form_from_json(cf);
  }
  if (j.contains("grid")) cfg.grid = grid_from_json(j.at("grid"));
  validate(cfg);
  return cfg;
}

}  // namespace mmvp
