#pragma once

#include <string>

#include "mmvp/rational.hpp"

namespace mmvp {

/// Element p + q*lambda of Q(lambda), lambda^2 = s.
///
/// Every coefficient carries its field context s. Mixing coefficients from
/// different fields throws ContextMismatch. With s = 0 the extension
/// collapses to Q and q must stay 0.
class QuadCoeff {
 public:
  QuadCoeff() = default;
  QuadCoeff(Rational p, Rational q, Rational s);
  /// Pure rational p in field s.
  QuadCoeff(Rational p, Rational s) : QuadCoeff(std::move(p), Rational(0), std::move(s)) {}

  static QuadCoeff lambda(const Rational& s) { return QuadCoeff(0, 1, s); }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Rational& context() const { return s_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }
  /// p^2 - q^2 s; nonzero iff the coefficient is invertible.
  Rational norm() const { return p_ * p_ - q_ * q_ * s_; }

  QuadCoeff inverse() const;
  QuadCoeff pow(unsigned exponent) const;

  QuadCoeff& operator+=(const QuadCoeff& o);
  QuadCoeff& operator-=(const QuadCoeff& o);
  QuadCoeff& operator*=(const QuadCoeff& o);
  QuadCoeff& operator*=(const Rational& r);
  QuadCoeff& operator/=(const QuadCoeff& o) { return *this *= o.inverse(); }

  friend QuadCoeff operator+(QuadCoeff a, const QuadCoeff& b) { return a += b; }
  friend QuadCoeff operator-(QuadCoeff a, const QuadCoeff& b) { return a -= b; }
  friend QuadCoeff operator*(QuadCoeff a, const QuadCoeff& b) { return a *= b; }
  friend QuadCoeff operator*(QuadCoeff a, const Rational& r) { return a *= r; }
  friend QuadCoeff operator*(const Rational& r, QuadCoeff a) { return a *= r; }
  friend QuadCoeff operator/(QuadCoeff a, const QuadCoeff& b) { return a /= b; }
  QuadCoeff operator-() const { return QuadCoeff(-p_, -q_, s_); }

  friend bool operator==(const QuadCoeff& a, const QuadCoeff& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.s_ == b.s_;
  }

  /// p + q*lambda_value.
  long double to_long_double(long double lambda_value) const;

 private:
  void require_same_field(const QuadCoeff& o) const;

  Rational p_{0};
  Rational q_{0};
  Rational s_{0};
};

/// "p", "q*lambda", or "p + q*lambda".
std::string to_string(const QuadCoeff& c);

}  // namespace mmvp
