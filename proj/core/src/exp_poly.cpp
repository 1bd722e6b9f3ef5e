#include "mmvp/exp_poly.hpp"

#include <cmath>
#include <sstream>

#include "mmvp/errors.hpp"

namespace mmvp {

ExpPoly::ExpPoly(Rational s) : s_(std::move(s)) {
  if (s_ < 0) throw std::invalid_argument("field context s must be nonnegative");
}

ExpPoly ExpPoly::constant(const QuadCoeff& c) { return monomial(c, 0, 0); }

ExpPoly ExpPoly::monomial(const QuadCoeff& c, unsigned power, int rate) {
  ExpPoly f(c.context());
  f.add_term(c, power, rate);
  return f;
}

void ExpPoly::check_key(int rate) const {
  if (s_ == 0 && rate != 0) {
    throw std::invalid_argument("exponential term with rate " + std::to_string(rate) + " in polynomial mode (s = 0)");
  }
}

void ExpPoly::require_same_field(const ExpPoly& o) const {
  if (s_ != o.s_) {
    throw ContextMismatch("ExpPoly fields differ: s = " + to_string(s_) + " vs " + to_string(o.s_));
  }
}

QuadCoeff ExpPoly::coefficient(unsigned power, int rate) const {
  auto it = terms_.find(TermKey{rate, power});
  return it == terms_.end() ? QuadCoeff(0, s_) : it->second;
}

void ExpPoly::add_term(const QuadCoeff& c, unsigned power, int rate) {
  if (c.context() != s_) throw ContextMismatch("term coefficient field differs from ExpPoly field");
  check_key(rate);
  if (c.is_zero()) return;
  TermKey key{rate, power};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  require_same_field(o);
  for (const auto& [key, c] : o.terms_) add_term(c, key.power, key.rate);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  require_same_field(o);
  for (const auto& [key, c] : o.terms_) add_term(-c, key.power, key.rate);
  return *this;
}

ExpPoly& ExpPoly::operator*=(const QuadCoeff& c) {
  if (c.context() != s_) throw ContextMismatch("scalar field differs from ExpPoly field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= c;
  return *this;
}

ExpPoly& ExpPoly::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= r;
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  a.require_same_field(b);
  ExpPoly out(a.s_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(ca * cb, ka.power + kb.power, ka.rate + kb.rate);
    }
  }
  return out;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

ExpPoly ExpPoly::divide_by_monomial(const ExpPoly& divisor) const {
  require_same_field(divisor);
  if (!divisor.is_monomial()) throw NotInvertible("divisor is not a single term: " + to_string(divisor));
  const auto& [dkey, dcoeff] = *divisor.terms_.begin();
  QuadCoeff inv = dcoeff.inverse();
  ExpPoly out(s_);
  for (const auto& [key, c] : terms_) {
    if (key.power < dkey.power) {
      throw NotInvertible("xi^" + std::to_string(dkey.power) + " does not divide term of power " +
                          std::to_string(key.power));
    }
    out.add_term(c * inv, key.power - dkey.power, key.rate - dkey.rate);
  }
  return out;
}

ExpPoly differentiate(const ExpPoly& f, unsigned order) {
  ExpPoly current = f;
  const Rational& s = f.context();
  for (unsigned step = 0; step < order && !current.is_zero(); ++step) {
    ExpPoly next(s);
    for (const auto& [key, c] : current.terms()) {
      if (key.power > 0) next.add_term(c * Rational(key.power), key.power - 1, key.rate);
      if (key.rate != 0) next.add_term(c * QuadCoeff(0, key.rate, s), key.power, key.rate);
    }
    current = std::move(next);
  }
  return current;
}

ExpPoly antiderivative(const ExpPoly& f) {
  const Rational& s = f.context();
  ExpPoly out(s);
  for (const auto& [key, c] : f.terms()) {
    if (key.rate == 0) {
      out.add_term(c * Rational(1, key.power + 1), key.power + 1, 0);
      continue;
    }
    // int xi^m e^{a xi} = e^{a xi} sum_j (-1)^j m!/(m-j)! xi^{m-j} / a^{j+1},  a = n*lambda
    QuadCoeff inv_rate = QuadCoeff(0, key.rate, s).inverse();
    QuadCoeff factor = c * inv_rate;  // c / a
    for (unsigned j = 0; j <= key.power; ++j) {
      out.add_term(factor, key.power - j, key.rate);
      // next: multiply by -(m-j)/a
      factor = factor * inv_rate * Rational(-static_cast<long>(key.power - j));
    }
  }
  return out;
}

long double evaluate(const ExpPoly& f, long double xi0, long double lambda_value) {
  long double s = to_long_double(f.context());
  long double mismatch = std::fabs(lambda_value * lambda_value - s);
  if (mismatch > 1e-12L * std::max(1.0L, s)) {
    throw std::invalid_argument("lambda value inconsistent with field context s");
  }
  long double total = 0.0L;
  for (const auto& [key, c] : f.terms()) {
    long double term = c.to_long_double(lambda_value) * std::pow(xi0, static_cast<long double>(key.power));
    if (key.rate != 0) term *= std::exp(static_cast<long double>(key.rate) * lambda_value * xi0);
    total += term;
  }
  return total;
}

std::string to_string(const ExpPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : f.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(c) << ")";
    if (key.power > 0) out << "*xi^" << key.power;
    if (key.rate != 0) out << "*exp(" << key.rate << "*lambda*xi)";
  }
  return out.str();
}

}  // namespace mmvp
