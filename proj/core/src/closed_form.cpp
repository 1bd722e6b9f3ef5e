#include "mmvp/closed_form.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace mmvp {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kNames{{
    {Family::Zero, "ZERO"},
    {Family::ExpRational, "EXP_RATIONAL"},
    {Family::Sech2, "SECH2"},
    {Family::Csch2, "CSCH2"},
    {Family::Csc2, "CSC2"},
    {Family::Sec2, "SEC2"},
    {Family::Algebraic, "ALGEBRAIC"},
    {Family::Sn2, "SN2"},
    {Family::Cn2, "CN2"},
    {Family::Dn2, "DN2"},
}};

ClosedForm make(Family f, double a1, double a2, double c, int direction) {
  ClosedForm cf;
  cf.family = f;
  cf.a1 = a1;
  cf.a2 = a2;
  cf.c = c;
  cf.direction = direction < 0 ? -1 : 1;
  return cf;
}

ClosedForm make_elliptic(Family f, double a1, double a2, double theta, double k, double shift) {
  ClosedForm cf = make(f, a1, a2, 0, 1);
  cf.theta = theta;
  cf.modulus = k;
  cf.shift = shift;
  require_valid(cf);
  return cf;
}

bool is_elliptic(Family f) { return f == Family::Sn2 || f == Family::Cn2 || f == Family::Dn2; }

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames) {
    if (fam == f) return name;
  }
  return "UNKNOWN";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : kNames) {
    if (n == name) return fam;
  }
  throw ParseError("unknown closed-form family '" + std::string(name) + "'");
}

ClosedForm ClosedForm::zero(double shift) {
  ClosedForm cf;
  cf.shift = shift;
  return cf;
}

ClosedForm ClosedForm::exp_rational(double a1, double a2, double c, int direction) {
  auto cf = make(Family::ExpRational, a1, a2, c, direction);
  require_valid(cf);
  return cf;
}

ClosedForm ClosedForm::sech2(double a1, double a2, double c, int direction) {
  auto cf = make(Family::Sech2, a1, a2, c, direction);
  require_valid(cf);
  return cf;
}

ClosedForm ClosedForm::csch2(double a1, double a2, double c, int direction) {
  auto cf = make(Family::Csch2, a1, a2, c, direction);
  require_valid(cf);
  return cf;
}

ClosedForm ClosedForm::csc2(double a1, double a2, double c, int direction) {
  auto cf = make(Family::Csc2, a1, a2, c, direction);
  require_valid(cf);
  return cf;
}

ClosedForm ClosedForm::sec2(double a1, double a2, double c, int direction) {
  auto cf = make(Family::Sec2, a1, a2, c, direction);
  require_valid(cf);
  return cf;
}

ClosedForm ClosedForm::algebraic(double a1) {
  auto cf = make(Family::Algebraic, a1, 0, 0, 1);
  require_valid(cf);
  return cf;
}

ClosedForm ClosedForm::sn2(double a1, double a2, double theta, double k, double shift) {
  return make_elliptic(Family::Sn2, a1, a2, theta, k, shift);
}

ClosedForm ClosedForm::cn2(double a1, double a2, double theta, double k, double shift) {
  return make_elliptic(Family::Cn2, a1, a2, theta, k, shift);
}

ClosedForm ClosedForm::dn2(double a1, double a2, double theta, double k, double shift) {
  return make_elliptic(Family::Dn2, a1, a2, theta, k, shift);
}

ClosedForm ClosedForm::sn2_from_seed(double a1, double a2, double shift, double v0, double v1) {
  if (!(a1 > 0)) throw ValidityError("sn2_from_seed: a1 must be positive");
  if (v1 == 0) throw ValidityError("sn2_from_seed: v1 = 0 gives a constant seed");
  const double p = a1 * (shift + v0) + a2;
  const double disc = 9 * p * p + 48 * a1 * a1 * a1 * v1;
  if (disc < 0) throw ValidityError("sn2_from_seed: negative discriminant");
  const double root = std::sqrt(disc);
  const double chi2 = (3 * a1 * shift + root + 3 * a1 * v0 + 3 * a2) / (24 * a1 * a1);
  if (chi2 < 0) throw ValidityError("sn2_from_seed: imaginary chi");
  const double kappa2 = (p * root - 3 * p * p) / (8 * a1 * a1 * a1 * v1) - 1;
  if (kappa2 < 0) throw ValidityError("sn2_from_seed: imaginary modulus kappa is not supported");
  return sn2(a1, a2, std::sqrt(chi2), std::sqrt(kappa2), shift);
}

Case3Seed case3_seed_from_theta(const Rational& a1, const Rational& a2, const Rational& shift,
                                const Rational& theta, const Rational& k) {
  if (a1 <= 0) throw ValidityError("case3_seed_from_theta: a1 must be positive");
  const Rational th2 = theta * theta;
  const Rational k2 = k * k;
  Case3Seed seed;
  seed.v0 = 4 * th2 * (k2 + 1) * a1 - shift - a2 / a1;
  seed.v1 = -12 * th2 * th2 * k2 * a1;
  return seed;
}

std::string validity_issue(const ClosedForm& cf) {
  if (cf.family == Family::Zero) return {};
  if (!(cf.a1 > 0)) return "a1 must be positive";
  const double a2e = cf.a2_effective();
  switch (cf.family) {
    case Family::ExpRational:
      if (!(a2e < 0)) return "requires a1*Lambda + a2 < 0";
      break;
    case Family::Sech2:
      if (!(a2e < 0)) return "requires a1*Lambda + a2 < 0";
      if (!(cf.c > 0)) return "requires c > 0";
      break;
    case Family::Csch2:
      if (!(a2e < 0)) return "requires a1*Lambda + a2 < 0";
      if (!(cf.c < 0)) return "requires c < 0 for a real logarithm";
      break;
    case Family::Csc2:
    case Family::Sec2:
      if (!(a2e > 0)) return "requires a1*Lambda + a2 > 0";
      if (cf.c == 0) return "requires c != 0";
      break;
    case Family::Algebraic:
      if (std::abs(a2e) > 1e-14 * std::max(1.0, std::abs(cf.a2))) return "requires a1*Lambda + a2 = 0";
      break;
    case Family::Sn2:
    case Family::Cn2:
    case Family::Dn2:
      if (!std::isfinite(cf.theta)) return "theta must be finite";
      if (!(cf.modulus >= 0) || !std::isfinite(cf.modulus)) return "modulus must be finite and nonnegative";
      break;
    default:
      break;
  }
  return {};
}

void require_valid(const ClosedForm& cf) {
  auto issue = validity_issue(cf);
  if (!issue.empty()) throw ValidityError(std::string(family_name(cf.family)) + ": " + issue);
}

ClosedForm sum_generating_function(const GeneralTerm& gt) {
  if (!gt.amplitude.is_rational() || !gt.ratio.is_rational()) {
    throw PatternMismatch("generating function needs rational amplitude and ratio");
  }
  if (gt.s <= 0) throw PatternMismatch("generating function needs lambda^2 > 0");
  const Rational& c = gt.amplitude.p();
  const Rational& q = gt.ratio.p();
  if (q == 0) throw PatternMismatch("zero ratio");
  // q = a1 c / (12 a2) and lambda^2 = -a2/a1^2.
  Rational a1 = -c / (12 * gt.s * q);
  Rational a2 = -gt.s * a1 * a1;
  return ClosedForm::exp_rational(static_cast<double>(to_long_double(a1)),
                                  static_cast<double>(to_long_double(a2)),
                                  static_cast<double>(to_long_double(c)), gt.rate < 0 ? 1 : -1);
}

double evaluate_closed_form(const ClosedForm& cf, double xi, unsigned derivative_order) {
  if (derivative_order > 4) throw std::invalid_argument("derivative order must be at most 4");
  return evaluate_jet<double>(cf, xi)[derivative_order];
}

std::complex<double> evaluate_complex(const ClosedForm& cf, double xi) {
  if (cf.family != Family::Csc2 && cf.family != Family::Sec2) return {evaluate_closed_form(cf, xi), 0.0};
  using C = std::complex<double>;
  const double a2e = cf.a2_effective();
  const double eta = cf.direction < 0 ? -xi : xi;
  double r = 12 * a2e / (cf.a1 * cf.c);
  if (cf.family == Family::Sec2) r = -r;
  const C z = std::sqrt(a2e) / (2 * cf.a1) * eta - C(0, 0.5) * std::log(C(r, 0));
  const C base = cf.family == Family::Csc2 ? std::sin(z) : std::cos(z);
  if (std::abs(base) < 1e-300) throw ValidityError("pole of trigonometric form");
  return cf.shift - 3 * a2e / cf.a1 / (base * base);
}

double ode_residual(const ClosedForm& cf, std::span<const double> xi_samples) {
  double worst = 0;
  const double a1 = cf.a1;
  for (double xi : xi_samples) {
    auto u = evaluate_jet<double>(cf, xi);
    double r = a1 * a1 * u[4] + cf.a2 * u[2] + a1 * (u[1] * u[1] + u[0] * u[2]);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

ClosedForm lambda_shift(const ClosedForm& cf, double shift) {
  ClosedForm out = cf;
  out.shift = cf.shift + shift;
  require_valid(out);
  return out;
}

double equivalence_check(const ClosedForm& a, const ClosedForm& b, std::span<const double> xi_samples) {
  double worst = 0;
  for (double xi : xi_samples) {
    worst = std::max(worst, std::abs(evaluate_closed_form(a, xi) - evaluate_closed_form(b, xi)));
  }
  return worst;
}

std::vector<double> maclaurin_coefficients(const ClosedForm& cf, unsigned max_degree) {
  const unsigned n = max_degree + 1;
  std::vector<double> out(n, 0.0);
  if (cf.family == Family::Zero) return out;
  if (!is_elliptic(cf.family)) {
    throw std::invalid_argument("maclaurin_coefficients: elliptic families only");
  }
  // sn' = cn dn, cn' = -sn dn, dn' = -k^2 sn cn, as power series in u.
  const double k2 = cf.modulus * cf.modulus;
  std::vector<double> s(n, 0.0), c(n, 0.0), d(n, 0.0);
  c[0] = 1;
  d[0] = 1;
  auto cauchy = [](const std::vector<double>& a, const std::vector<double>& b, unsigned m) {
    double acc = 0;
    for (unsigned i = 0; i <= m; ++i) acc += a[i] * b[m - i];
    return acc;
  };
  for (unsigned m = 0; m + 1 < n; ++m) {
    s[m + 1] = cauchy(c, d, m) / (m + 1);
    c[m + 1] = -cauchy(s, d, m) / (m + 1);
    d[m + 1] = -k2 * cauchy(s, c, m) / (m + 1);
  }
  const auto& base = cf.family == Family::Sn2 ? s : cf.family == Family::Cn2 ? c : d;
  const double a1 = cf.a1;
  const double a2e = cf.a2_effective();
  const double th2 = cf.theta * cf.theta;
  double c0 = 0, c1 = 0;
  if (cf.family == Family::Sn2) {
    c0 = 4 * th2 * (k2 + 1) * a1 - a2e / a1;
    c1 = -12 * k2 * th2 * a1;
  } else if (cf.family == Family::Cn2) {
    c0 = (4 - 8 * k2) * th2 * a1 - a2e / a1;
    c1 = 12 * k2 * th2 * a1;
  } else {
    c0 = 4 * th2 * (k2 - 2) * a1 - a2e / a1;
    c1 = 12 * th2 * a1;
  }
  const double scale = cf.theta * (cf.direction < 0 ? -1.0 : 1.0);
  double w = 1;
  for (unsigned m = 0; m < n; ++m) {
    out[m] = c1 * cauchy(base, base, m) * w;
    w *= scale;
  }
  out[0] += c0;
  return out;
}

MaclaurinReport maclaurin_match(const SeriesSolution& series, const ClosedForm& cf, unsigned max_degree) {
  if (series.problem.mode() != OperatorMode::Polynomial) {
    throw std::invalid_argument("maclaurin_match: series must be in polynomial mode");
  }
  if (series.iterates.empty()) throw std::invalid_argument("maclaurin_match: empty series");
  const unsigned k_max = static_cast<unsigned>(series.iterates.size() - 1);
  const unsigned k_eff = series.scheme == Scheme::PHalf ? k_max : k_max / 2;
  MaclaurinReport rep;
  rep.compared_degree = std::min(max_degree, 2 * k_eff + 2);
  const ExpPoly sum = partial_sum(series);
  rep.closed_form_coefficients = maclaurin_coefficients(cf, rep.compared_degree);
  rep.series_coefficients.resize(rep.compared_degree + 1);
  for (unsigned m = 0; m <= rep.compared_degree; ++m) {
    const QuadCoeff coeff = sum.coefficient(m, 0);
    rep.series_coefficients[m] = static_cast<double>(to_long_double(coeff.p()));
    rep.max_coeff_error =
        std::max(rep.max_coeff_error, std::abs(rep.series_coefficients[m] - rep.closed_form_coefficients[m]));
  }
  return rep;
}

std::string to_string(const ClosedForm& cf) {
  std::ostringstream os;
  os.precision(17);
  os << family_name(cf.family) << "{a1=" << cf.a1 << ", a2=" << cf.a2;
  if (is_elliptic(cf.family)) {
    os << ", theta=" << cf.theta << ", k=" << cf.modulus;
  } else if (cf.family != Family::Zero && cf.family != Family::Algebraic) {
    os << ", c=" << cf.c;
  }
  os << ", Lambda=" << cf.shift;
  if (cf.direction < 0) os << ", direction=-1";
  os << "}";
  return os.str();
}

}  // namespace mmvp
