#include "mmvp/nonlinearity.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "mmvp/errors.hpp"

namespace mmvp {

NonlinearitySpec::NonlinearitySpec(Rational s, std::vector<NonlinearMonomial> monomials, unsigned max_order)
    : s_(std::move(s)), monomials_(std::move(monomials)), max_order_(max_order) {
  for (auto& m : monomials_) {
    if (m.factors.empty()) throw std::invalid_argument("nonlinearity monomial without factors");
    if (m.scalar.context() != s_) throw ContextMismatch("monomial scalar field differs from nonlinearity field");
    std::sort(m.factors.begin(), m.factors.end());
    if (m.factors.back() > max_order_) {
      throw std::invalid_argument("derivative order " + std::to_string(m.factors.back()) + " exceeds operator order " +
                                  std::to_string(max_order_));
    }
  }
}

unsigned NonlinearitySpec::max_degree() const {
  unsigned d = 0;
  for (const auto& m : monomials_) d = std::max(d, m.degree());
  return d;
}

unsigned NonlinearitySpec::max_derivative() const {
  unsigned d = 0;
  for (const auto& m : monomials_) d = std::max(d, m.factors.back());
  return d;
}

ExpPoly apply_nonlinearity(const NonlinearitySpec& spec, const ExpPoly& f) {
  if (f.context() != spec.context()) throw ContextMismatch("nonlinearity and argument fields differ");
  std::vector<ExpPoly> derivs;
  derivs.push_back(f);
  for (unsigned d = 1; d <= spec.max_derivative(); ++d) derivs.push_back(differentiate(derivs.back()));
  ExpPoly out(spec.context());
  for (const auto& m : spec.monomials()) {
    ExpPoly product = ExpPoly::constant(m.scalar);
    for (unsigned order : m.factors) product = product * derivs[order];
    out += product;
  }
  return out;
}

long double apply_nonlinearity(const NonlinearitySpec& spec, std::span<const long double> derivs,
                               long double lambda_value) {
  long double total = 0.0L;
  for (const auto& m : spec.monomials()) {
    long double term = m.scalar.to_long_double(lambda_value);
    for (unsigned order : m.factors) {
      if (order >= derivs.size()) throw std::out_of_range("missing derivative value");
      term *= derivs[order];
    }
    total += term;
  }
  return total;
}

namespace {

// Polynomial in the derivative symbols U0..Un with Q(lambda) coefficients.
using Poly = std::map<std::vector<unsigned>, QuadCoeff>;

void poly_add_term(Poly& p, const std::vector<unsigned>& key, const QuadCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      std::vector<unsigned> key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      std::sort(key.begin(), key.end());
      poly_add_term(out, key, ca * cb);
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const std::map<std::string, Rational>& params, const Rational& s)
      : text_(text), params_(params), s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("nonlinearity: " + what + " at position " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly constant(const QuadCoeff& c) {
    Poly p;
    poly_add_term(p, {}, c);
    return p;
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+')) {
        for (const auto& [k, c] : term()) poly_add_term(acc, k, c);
      } else if (accept('-')) {
        for (const auto& [k, c] : term()) poly_add_term(acc, k, -c);
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = poly_mul(acc, unary());
      } else if (accept('/')) {
        Poly divisor = unary();
        if (divisor.size() != 1 || !divisor.begin()->first.empty()) fail("division by a non-constant");
        QuadCoeff inv;
        try {
          inv = divisor.begin()->second.inverse();
        } catch (const NotInvertible&) {
          fail("division by zero");
        }
        Poly scaled;
        for (const auto& [k, c] : acc) poly_add_term(scaled, k, c * inv);
        acc = std::move(scaled);
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) {
      Poly p = unary();
      for (auto& [k, c] : p) c = -c;
      return p;
    }
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      Poly result = constant(QuadCoeff(1, s_));
      for (unsigned i = 0; i < e; ++i) result = poly_mul(result, base);
      return result;
    }
    return base;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' || text_[pos_] == 'e' ||
              text_[pos_] == 'E' ||
              ((text_[pos_] == '-' || text_[pos_] == '+') && pos_ > start &&
               (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
        ++pos_;
      }
      return constant(QuadCoeff(parse_rational(text_.substr(start, pos_ - start)), s_));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name.size() >= 2 && name[0] == 'U' &&
          std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        Poly p;
        poly_add_term(p, {static_cast<unsigned>(std::stoul(name.substr(1)))}, QuadCoeff(1, s_));
        return p;
      }
      if (name == "lambda") {
        if (s_ == 0) fail("lambda is undefined in polynomial mode");
        return constant(QuadCoeff::lambda(s_));
      }
      auto it = params_.find(name);
      if (it == params_.end()) fail("unknown identifier '" + name + "'");
      return constant(QuadCoeff(it->second, s_));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::map<std::string, Rational>& params_;
  Rational s_;
  std::size_t pos_ = 0;
};

}  // namespace

NonlinearitySpec parse_nonlinearity(std::string_view text, const std::map<std::string, Rational>& parameters,
                                    const Rational& s, unsigned max_order) {
  Poly poly = Parser(text, parameters, s).parse();
  std::vector<NonlinearMonomial> monomials;
  for (const auto& [key, c] : poly) {
    if (key.empty()) throw ParseError("nonlinearity has a constant term " + to_string(c));
    monomials.push_back(NonlinearMonomial{c, key});
  }
  return NonlinearitySpec(s, std::move(monomials), max_order);
}

std::string to_string(const NonlinearitySpec& spec) {
  if (spec.monomials().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& m : spec.monomials()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(m.scalar) << ")";
    for (unsigned f : m.factors) out << "*U" << f;
  }
  return out.str();
}

}  // namespace mmvp
