#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmvp/elliptic.hpp"
#include "mmvp/errors.hpp"
#include "mmvp/general_term.hpp"

namespace mmvp {

enum class Family { Zero, ExpRational, Sech2, Csch2, Csc2, Sec2, Algebraic, Sn2, Cn2, Dn2 };

std::string_view family_name(Family f);
/// Inverse of family_name ("EXP_RATIONAL", "SN2", ...). Throws ParseError.
Family parse_family(std::string_view name);

/// Closed-form solution of a1^2 U'''' + a2 U'' + a1 (U'^2 + U U'') = 0.
///
/// Every family is stored as U(xi) = shift + V(direction * xi) where V solves
/// the same equation with a2 replaced by a2 + a1 * shift. The elliptic
/// families use theta and modulus; the others use the seed constant c.
struct ClosedForm {
  Family family = Family::Zero;
  double a1 = 1;
  double a2 = 0;
  double c = 0;
  double shift = 0;
  double theta = 0;
  double modulus = 0;
  int direction = 1;

  double a2_effective() const { return a2 + a1 * shift; }

  static ClosedForm zero(double shift = 0);
  /// 144 a2^2 c e^{lambda xi} / (12 a2 e^{lambda xi} - a1 c)^2, lambda = sqrt(-a2)/a1.
  static ClosedForm exp_rational(double a1, double a2, double c, int direction = 1);
  static ClosedForm sech2(double a1, double a2, double c, int direction = 1);
  static ClosedForm csch2(double a1, double a2, double c, int direction = 1);
  static ClosedForm csc2(double a1, double a2, double c, int direction = 1);
  static ClosedForm sec2(double a1, double a2, double c, int direction = 1);
  /// -12 a1 / xi^2 (requires a2 = 0).
  static ClosedForm algebraic(double a1);
  /// Lambda + V with V = (4 theta^2 (k^2+1) a1^2 - a1 Lambda - a2)/a1 - 12 k^2 theta^2 a1 sn^2(theta xi, k).
  static ClosedForm sn2(double a1, double a2, double theta, double k, double shift = 0);
  static ClosedForm cn2(double a1, double a2, double theta, double k, double shift = 0);
  static ClosedForm dn2(double a1, double a2, double theta, double k, double shift = 0);
  /// sn^2 form parametrised by the seed V0 = v1 xi^2 + v0: theta = chi and
  /// k = kappa from the seed. Throws ValidityError when chi or kappa is not real.
  static ClosedForm sn2_from_seed(double a1, double a2, double shift, double v0, double v1);
};

/// Exact seed constants reproducing the (theta, k) sn^2 form.
struct Case3Seed {
  Rational v0;
  Rational v1;
};
/// v0 = 4 theta^2 (k^2+1) a1 - Lambda - a2/a1, v1 = -12 theta^4 k^2 a1.
Case3Seed case3_seed_from_theta(const Rational& a1, const Rational& a2, const Rational& shift,
                                const Rational& theta, const Rational& k);

/// Real-validity predicate for the family's parameters. Returns an empty
/// string when valid, otherwise the reason.
std::string validity_issue(const ClosedForm& cf);
void require_valid(const ClosedForm& cf);

/// Sum of A (k+1) q^k E^{k+1}: an EXP_RATIONAL form with a1, a2, c recovered
/// from A = c and q = a1 c / (12 a2).
ClosedForm sum_generating_function(const GeneralTerm& gt);

namespace detail {

/// y, y', y'' and the coefficients of y'' = a0 + a1 y + a2 y^2 for the
/// squared base function of a family.
template <class T>
struct BaseJet {
  T y, dy, alpha1, alpha2;
};

template <class T>
T pole_guard(T denom, const char* what) {
  using std::abs;
  if (abs(denom) < T(1e-300) || !std::isfinite(static_cast<double>(denom))) {
    throw ValidityError(std::string("pole of ") + what);
  }
  return denom;
}

template <class T>
BaseJet<T> base_jet(Family f, T z, T k) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  using std::tanh;
  switch (f) {
    case Family::Sech2: {
      T ch = cosh(z);
      T y = 1 / (ch * ch);
      return {y, -2 * y * tanh(z), T(4), T(-6)};
    }
    case Family::Csch2: {
      T sh = pole_guard(sinh(z), "csch^2");
      T y = 1 / (sh * sh);
      return {y, -2 * y * cosh(z) / sh, T(4), T(6)};
    }
    case Family::Csc2: {
      T sn = pole_guard(sin(z), "csc^2");
      T y = 1 / (sn * sn);
      return {y, -2 * y * cos(z) / sn, T(-4), T(6)};
    }
    case Family::Sec2: {
      T cs = pole_guard(cos(z), "sec^2");
      T y = 1 / (cs * cs);
      return {y, 2 * y * sin(z) / cs, T(-4), T(6)};
    }
    case Family::Sn2:
    case Family::Cn2:
    case Family::Dn2: {
      auto j = jacobi_any_modulus<T>(z, k);
      T k2 = k * k;
      T scd = j.sn * j.cn * j.dn;
      if (f == Family::Sn2) return {j.sn * j.sn, 2 * scd, -4 * (1 + k2), 6 * k2};
      if (f == Family::Cn2) return {j.cn * j.cn, -2 * scd, 8 * k2 - 4, -6 * k2};
      return {j.dn * j.dn, -2 * k2 * scd, 8 - 4 * k2, T(-6)};
    }
    default:
      throw std::logic_error("base_jet: family has no squared base function");
  }
}

template <class T>
T alpha0(Family f, T k) {
  if (f == Family::Sn2) return T(2);
  if (f == Family::Cn2) return 2 - 2 * k * k;
  if (f == Family::Dn2) return 2 * k * k - 2;
  return T(0);
}

/// theta^n h(t) for h = t/(1-t)^2, n = 0..4, via Eulerian polynomials:
/// theta^n h = t A_{n+1}(t) / (1-t)^{n+2}.
template <class T>
std::array<T, 5> euler_jet(T t) {
  T one_minus = pole_guard(1 - t, "exp-rational form");
  std::array<T, 5> eul{T(1), 1 + t, 1 + t * (4 + t), 1 + t * (11 + t * (11 + t)),
                       1 + t * (26 + t * (66 + t * (26 + t)))};
  std::array<T, 5> out{};
  T den = one_minus * one_minus;
  for (int n = 0; n < 5; ++n) {
    out[n] = t * eul[n] / den;
    den *= one_minus;
  }
  return out;
}

template <class T>
std::array<T, 5> exp_rational_jet(const ClosedForm& cf, T eta) {
  using std::abs;
  using std::exp;
  using std::log;
  using std::sqrt;
  T a1 = cf.a1;
  T a2e = cf.a2_effective();
  T c = cf.c;
  T lambda = sqrt(-a2e) / a1;
  T q = a1 * c / (12 * a2e);
  T scale = 12 * a2e / a1;  // c / q
  // t = q e^{-lambda eta}; switch to 1/t when |t| > 1 to keep exponentials bounded.
  T log_abs_t = log(abs(q)) - lambda * eta;
  T sign = q < 0 ? T(-1) : T(1);
  std::array<T, 5> th;
  if (log_abs_t <= 0) {
    th = euler_jet<T>(sign * exp(log_abs_t));
  } else {
    th = euler_jet<T>(sign * exp(-log_abs_t));
    th[1] = -th[1];
    th[3] = -th[3];
  }
  std::array<T, 5> out{};
  T factor = scale;
  for (int n = 0; n < 5; ++n) {
    out[n] = factor * th[n];
    factor *= -lambda;
  }
  return out;
}

/// Real phase of the trigonometric forms: 0 (ratio 1) or pi/2 (ratio -1).
template <class T>
T trig_real_phase(const ClosedForm& cf) {
  double a2e = cf.a2_effective();
  double r = 12 * a2e / (cf.a1 * cf.c);
  if (cf.family == Family::Sec2) r = -r;
  if (std::abs(std::log(std::abs(r))) > 1e-12) {
    throw ValidityError(std::string(family_name(cf.family)) +
                        " is complex-valued unless |12 a2/(a1 c)| = 1; use evaluate_complex");
  }
  return r > 0 ? T(0) : boost::math::constants::half_pi<T>();
}

}  // namespace detail

/// U, U', U'', U''', U'''' at xi (derivatives with respect to xi).
/// Throws ValidityError at poles or when the real form is complex.
template <class T>
std::array<T, 5> evaluate_jet(const ClosedForm& cf, T xi) {
  using std::log;
  using std::sqrt;
  std::array<T, 5> v{};
  const T dir = cf.direction < 0 ? T(-1) : T(1);
  const T eta = dir * xi;
  const T a1 = cf.a1;
  const T a2e = cf.a2_effective();

  switch (cf.family) {
    case Family::Zero:
      break;
    case Family::ExpRational:
      if (cf.c != 0) v = detail::exp_rational_jet<T>(cf, eta);
      break;
    case Family::Algebraic: {
      detail::pole_guard(eta, "algebraic form");
      T inv = 1 / eta;
      T p = -12 * a1 * inv * inv;
      T fact = 1;
      for (int n = 0; n < 5; ++n) {
        v[n] = p * fact;
        fact *= -(n + 2) * inv;
      }
      break;
    }
    default: {
      T c0 = 0, c1 = 0, omega = 0, phase = 0, k = 0;
      switch (cf.family) {
        case Family::Sech2:
          c1 = -3 * a2e / a1;
          omega = sqrt(-a2e) / (2 * a1);
          phase = log(-12 * a2e / (a1 * T(cf.c))) / 2;
          break;
        case Family::Csch2:
          c1 = 3 * a2e / a1;
          omega = sqrt(-a2e) / (2 * a1);
          phase = log(12 * a2e / (a1 * T(cf.c))) / 2;
          break;
        case Family::Csc2:
        case Family::Sec2:
          c1 = -3 * a2e / a1;
          omega = sqrt(a2e) / (2 * a1);
          phase = detail::trig_real_phase<T>(cf);
          break;
        case Family::Sn2:
        case Family::Cn2:
        case Family::Dn2: {
          T th = cf.theta;
          k = cf.modulus;
          T k2 = k * k;
          omega = th;
          if (cf.family == Family::Sn2) {
            c0 = 4 * th * th * (k2 + 1) * a1 - a2e / a1;
            c1 = -12 * k2 * th * th * a1;
          } else if (cf.family == Family::Cn2) {
            c0 = (4 - 8 * k2) * th * th * a1 - a2e / a1;
            c1 = 12 * k2 * th * th * a1;
          } else {
            c0 = 4 * th * th * (k2 - 2) * a1 - a2e / a1;
            c1 = 12 * th * th * a1;
          }
          break;
        }
        default:
          break;
      }
      auto b = detail::base_jet<T>(cf.family, omega * eta + phase, k);
      T y2 = detail::alpha0<T>(cf.family, k) + b.alpha1 * b.y + b.alpha2 * b.y * b.y;
      T lin = b.alpha1 + 2 * b.alpha2 * b.y;
      T y3 = lin * b.dy;
      T y4 = lin * y2 + 2 * b.alpha2 * b.dy * b.dy;
      std::array<T, 5> y{b.y, b.dy, y2, y3, y4};
      T w = 1;
      for (int n = 0; n < 5; ++n) {
        v[n] = c1 * w * y[n];
        w *= omega;
      }
      v[0] += c0;
      break;
    }
  }
  T d = 1;
  for (int n = 1; n < 5; ++n) {
    d *= dir;
    v[n] *= d;
  }
  v[0] += T(cf.shift);
  return v;
}

/// Value or derivative of order 0..4.
double evaluate_closed_form(const ClosedForm& cf, double xi, unsigned derivative_order = 0);

/// Direct complex evaluation of the family formula (value only). Real
/// families return a zero imaginary part.
std::complex<double> evaluate_complex(const ClosedForm& cf, double xi);

/// max |a1^2 U'''' + a2 U'' + a1 (U'^2 + U U'')| over the samples.
double ode_residual(const ClosedForm& cf, std::span<const double> xi_samples);

/// Lambda + U(xi; a1, a1 Lambda + a2). Shifts compose additively.
/// Throws ValidityError if the shifted parameters leave the family's region.
ClosedForm lambda_shift(const ClosedForm& cf, double shift);

/// max |a(xi) - b(xi)| over the samples.
double equivalence_check(const ClosedForm& a, const ClosedForm& b, std::span<const double> xi_samples);

/// Maclaurin coefficients of U - shift through max_degree, computed from the
/// Taylor recurrences of sn, cn, dn (elliptic families and Zero only).
std::vector<double> maclaurin_coefficients(const ClosedForm& cf, unsigned max_degree);

struct MaclaurinReport {
  double max_coeff_error = 0;
  unsigned compared_degree = 0;
  std::vector<double> series_coefficients;
  std::vector<double> closed_form_coefficients;
};

/// Compares the polynomial partial sum of a series against the closed
/// form's Maclaurin coefficients up to min(max_degree, accurate degree of the
/// partial sum).
MaclaurinReport maclaurin_match(const SeriesSolution& series, const ClosedForm& cf, unsigned max_degree);

std::string to_string(const ClosedForm& cf);

}  // namespace mmvp
