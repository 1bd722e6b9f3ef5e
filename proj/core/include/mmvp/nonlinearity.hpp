#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmvp/exp_poly.hpp"

namespace mmvp {

/// scalar * U^(f1) * U^(f2) * ... with f_i derivative orders.
struct NonlinearMonomial {
  QuadCoeff scalar;
  std::vector<unsigned> factors;  // sorted ascending

  unsigned degree() const { return static_cast<unsigned>(factors.size()); }
};

/// Polynomial nonlinearity N[U] in U and its derivatives.
///
/// Linear monomials are allowed (a linear term may be moved into N, as done
/// for the polynomial-mode problem). A monomial without factors is rejected:
/// constant offsets must be written as a factor product, e.g. (L + U0)*U2,
/// which the parser expands into L*U2 + U0*U2.
class NonlinearitySpec {
 public:
  NonlinearitySpec(Rational s, std::vector<NonlinearMonomial> monomials, unsigned max_order = 4);

  const Rational& context() const { return s_; }
  const std::vector<NonlinearMonomial>& monomials() const { return monomials_; }
  unsigned max_order() const { return max_order_; }
  unsigned max_degree() const;
  unsigned max_derivative() const;

 private:
  Rational s_;
  std::vector<NonlinearMonomial> monomials_;
  unsigned max_order_;
};

/// Exact N[f].
ExpPoly apply_nonlinearity(const NonlinearitySpec& spec, const ExpPoly& f);

/// N evaluated from numerical derivative values: derivs[d] = U^(d)(xi).
long double apply_nonlinearity(const NonlinearitySpec& spec, std::span<const long double> derivs,
                               long double lambda_value);

/// Parses the compact text form. Grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*       division only by constants
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := number | identifier | 'U' digit | '(' expr ')'
///
/// Ud is the d-th derivative of U. Identifiers (a1, a2, L, ...) are looked up
/// in `parameters`; numbers may be integers, decimals or n/d fractions. The
/// expression is expanded to a sum of monomials; like monomials merge.
NonlinearitySpec parse_nonlinearity(std::string_view text, const std::map<std::string, Rational>& parameters,
                                    const Rational& s, unsigned max_order = 4);

/// Canonical text form that parse_nonlinearity reads back to the same spec.
std::string to_string(const NonlinearitySpec& spec);

}  // namespace mmvp
