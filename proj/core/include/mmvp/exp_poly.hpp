#pragma once

#include <compare>
#include <map>
#include <string>

#include "mmvp/quad_coeff.hpp"

namespace mmvp {

/// Exponent pair of a term xi^power * exp(rate * lambda * xi).
struct TermKey {
  int rate = 0;
  unsigned power = 0;

  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// Finite sum of terms c * xi^m * exp(n*lambda*xi), c in Q(lambda).
///
/// Always in normal form: no zero coefficients are stored, so two values are
/// equal iff their term maps are equal. Terms iterate in (rate, power) order.
/// With s = 0 only rate 0 is admissible (pure polynomials in xi).
class ExpPoly {
 public:
  using TermMap = std::map<TermKey, QuadCoeff>;

  explicit ExpPoly(Rational s = 0);

  static ExpPoly constant(const QuadCoeff& c);
  static ExpPoly constant(const Rational& value, const Rational& s) { return constant(QuadCoeff(value, s)); }
  static ExpPoly monomial(const QuadCoeff& c, unsigned power, int rate);
  /// The identity function xi.
  static ExpPoly xi(const Rational& s) { return monomial(QuadCoeff(1, s), 1, 0); }

  const Rational& context() const { return s_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Coefficient of xi^power e^{rate lambda xi}; zero if absent.
  QuadCoeff coefficient(unsigned power, int rate) const;

  /// Adds c * xi^power * e^{rate lambda xi} in place.
  void add_term(const QuadCoeff& c, unsigned power, int rate);

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly& operator*=(const QuadCoeff& c);
  ExpPoly& operator*=(const Rational& r);

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(ExpPoly a, const QuadCoeff& c) { return a *= c; }
  friend ExpPoly operator*(const QuadCoeff& c, ExpPoly a) { return a *= c; }
  friend ExpPoly operator*(ExpPoly a, const Rational& r) { return a *= r; }
  friend ExpPoly operator*(const Rational& r, ExpPoly a) { return a *= r; }
  ExpPoly operator-() const;

  /// Exact division by a single-term divisor with invertible coefficient.
  /// Requires the divisor's xi power to divide every term's power.
  ExpPoly divide_by_monomial(const ExpPoly& divisor) const;

  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.s_ == b.s_ && a.terms_ == b.terms_; }

 private:
  void require_same_field(const ExpPoly& o) const;
  void check_key(int rate) const;

  Rational s_;
  TermMap terms_;
};

/// order-th xi-derivative.
ExpPoly differentiate(const ExpPoly& f, unsigned order = 1);

/// Exact antiderivative with zero integration constant.
ExpPoly antiderivative(const ExpPoly& f);

/// Numerical value at xi0 with lambda replaced by lambda_value.
/// Throws std::invalid_argument unless lambda_value^2 matches s to 1e-12.
long double evaluate(const ExpPoly& f, long double xi0, long double lambda_value);

/// Human-readable form, e.g. "-1/6*exp(-2*lambda*xi) + xi^2".
std::string to_string(const ExpPoly& f);

}  // namespace mmvp
