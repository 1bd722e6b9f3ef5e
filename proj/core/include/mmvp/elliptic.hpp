#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace mmvp {

template <class T>
struct JacobiValues {
  T sn;
  T cn;
  T dn;
};

namespace detail {

template <class T>
T agm_tolerance() {
  return std::numeric_limits<T>::epsilon();
}

}  // namespace detail

/// sn, cn, dn for real argument u and modulus 0 <= k <= 1.
///
/// Descending Landen / AGM: the arithmetic-geometric mean of (1, k') is run
/// until the gap c_n drops below machine epsilon, the amplitude is rebuilt
/// by back-substitution phi_{n-1} = (phi_n + asin(c_n/a_n sin phi_n)) / 2.
/// The argument is first reduced modulo the real period 4K(k). The endpoints
/// k = 0 and k = 1 return the circular and hyperbolic limits directly.
template <class T>
JacobiValues<T> jacobi_sn_cn_dn(T u, T k) {
  using std::abs;
  using std::asin;
  using std::cos;
  using std::cosh;
  using std::ldexp;
  using std::round;
  using std::sin;
  using std::sqrt;
  using std::tanh;

  if (!(k >= 0) || k > 1) throw std::domain_error("jacobi_sn_cn_dn: modulus must lie in [0, 1]");
  if (k == 0) return {sin(u), cos(u), T(1)};
  if (k == 1) {
    T sech = 1 / cosh(u);
    return {tanh(u), sech, sech};
  }

  constexpr int kMaxSteps = 64;
  std::array<T, kMaxSteps + 1> a{}, c{};
  a[0] = 1;
  c[0] = k;
  T b = sqrt((1 - k) * (1 + k));
  const T tol = detail::agm_tolerance<T>();
  int n = 0;
  while (abs(c[n]) > tol * a[n]) {
    if (n == kMaxSteps) throw std::runtime_error("jacobi_sn_cn_dn: AGM did not converge");
    a[n + 1] = (a[n] + b) / 2;
    c[n + 1] = (a[n] - b) / 2;
    b = sqrt(a[n] * b);
    ++n;
  }

  // K(k) = pi / (2 a_N)
  const T pi = boost::math::constants::pi<T>();
  const T period = 2 * pi / a[n];  // 4K
  if (abs(u) > period) u -= period * round(u / period);

  T phi = ldexp(a[n] * u, n);
  T phi_prev = phi;
  for (int j = n; j >= 1; --j) {
    phi_prev = phi;
    phi = (phi + asin(c[j] * sin(phi) / a[j])) / 2;
  }
  T sn = sin(phi);
  T cn = cos(phi);
  T dn = cn / cos(phi_prev - phi);
  if (n == 0 || !std::isfinite(static_cast<double>(dn))) dn = sqrt(1 - k * k * sn * sn);
  return {sn, cn, dn};
}

/// sn(u; k) for modulus k > 1 through sn(z; 1/m) = m sn(z/m; m), i.e.
/// sn(u; k) = sn(k u; 1/k) / k.
template <class T>
T reciprocal_modulus(T u, T k) {
  if (!(k > 1)) throw std::domain_error("reciprocal_modulus: modulus must exceed 1");
  return jacobi_sn_cn_dn<T>(k * u, 1 / k).sn / k;
}

/// sn, cn, dn for any real modulus k >= 0. For k > 1 the reciprocal-modulus
/// transformation gives sn = sn(ku; 1/k)/k, cn = dn(ku; 1/k), dn = cn(ku; 1/k).
template <class T>
JacobiValues<T> jacobi_any_modulus(T u, T k) {
  using std::abs;
  if (k < 0) k = -k;
  if (k <= 1) return jacobi_sn_cn_dn<T>(u, k);
  auto r = jacobi_sn_cn_dn<T>(k * u, 1 / k);
  return {r.sn / k, r.dn, r.cn};
}

}  // namespace mmvp
