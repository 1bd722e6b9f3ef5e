#include "mmvp/quad_coeff.hpp"

#include "mmvp/errors.hpp"

namespace mmvp {

QuadCoeff::QuadCoeff(Rational p, Rational q, Rational s) : p_(std::move(p)), q_(std::move(q)), s_(std::move(s)) {
  if (s_ < 0) throw std::invalid_argument("field context s must be nonnegative, got " + to_string(s_));
  if (s_ == 0 && q_ != 0) throw std::invalid_argument("lambda component must vanish when s = 0");
}

void QuadCoeff::require_same_field(const QuadCoeff& o) const {
  if (s_ != o.s_) {
    throw ContextMismatch("coefficient fields differ: s = " + to_string(s_) + " vs " + to_string(o.s_));
  }
}

QuadCoeff& QuadCoeff::operator+=(const QuadCoeff& o) {
  require_same_field(o);
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

QuadCoeff& QuadCoeff::operator-=(const QuadCoeff& o) {
  require_same_field(o);
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

QuadCoeff& QuadCoeff::operator*=(const QuadCoeff& o) {
  require_same_field(o);
  Rational p = p_ * o.p_ + q_ * o.q_ * s_;
  Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

QuadCoeff& QuadCoeff::operator*=(const Rational& r) {
  p_ *= r;
  q_ *= r;
  return *this;
}

QuadCoeff QuadCoeff::inverse() const {
  Rational n = norm();
  if (n == 0) throw NotInvertible("coefficient " + to_string(*this) + " has zero norm");
  return QuadCoeff(p_ / n, -q_ / n, s_);
}

QuadCoeff QuadCoeff::pow(unsigned exponent) const {
  QuadCoeff result(1, s_);
  QuadCoeff base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

long double QuadCoeff::to_long_double(long double lambda_value) const {
  long double v = mmvp::to_long_double(p_);
  if (q_ != 0) v += mmvp::to_long_double(q_) * lambda_value;
  return v;
}

std::string to_string(const QuadCoeff& c) {
  if (c.q() == 0) return to_string(c.p());
  std::string lam = to_string(c.q()) + "*lambda";
  if (c.p() == 0) return lam;
  return to_string(c.p()) + " + " + lam;
}

}  // namespace mmvp
