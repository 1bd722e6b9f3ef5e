#include "mmvp/rational.hpp"

#include <cctype>
#include <charconv>
#include <algorithm>
#include <cmath>

#include "mmvp/errors.hpp"

namespace mmvp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string original(text);
  if (text.empty()) throw ParseError("empty rational literal");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("bad rational literal '" + original + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + original + "'");
    value = Rational(n, d);
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = text.substr(e + 1);
      if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
        throw ParseError("bad exponent in '" + original + "'");
      }
      if (std::labs(exponent) > 100000) throw ParseError("exponent out of range in '" + original + "'");
      text = text.substr(0, e);
    }
    std::string digits;
    long scale = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      auto int_part = text.substr(0, dot);
      auto frac_part = text.substr(dot + 1);
      if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
          (int_part.empty() && frac_part.empty())) {
        throw ParseError("bad decimal literal '" + original + "'");
      }
      digits = std::string(int_part) + std::string(frac_part);
      scale = static_cast<long>(frac_part.size());
    } else {
      if (!all_digits(text)) throw ParseError("bad rational literal '" + original + "'");
      digits = std::string(text);
    }
    mpz_class mantissa(digits, 10);
    long power = exponent - scale;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(power)));
    value = power >= 0 ? Rational(mantissa * ten_pow) : Rational(mantissa, ten_pow);
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long double to_long_double(const Rational& r) {
  if (r == 0) return 0.0L;
  mpz_class num = abs(r.get_num());
  mpz_class den = r.get_den();
  // Integer quotient carrying at least 64 significant bits, then keep the top
  // 64 of them; long double holds a 64-bit mantissa on x86.
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  long shift = 64 - e;
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  mpz_class q = num / den;
  long extra = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 64;
  if (extra > 0) q >>= static_cast<mp_bitcnt_t>(extra);
  long double mantissa = static_cast<long double>(mpz_get_ui(q.get_mpz_t()));
  long double value = std::ldexp(mantissa, static_cast<int>(std::max(extra, 0L) - shift));
  return r < 0 ? -value : value;
}

}  // namespace mmvp
