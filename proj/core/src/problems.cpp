#include "mmvp/problems.hpp"

#include <map>
#include <string>

namespace mmvp {

ProblemSpec traveling_wave_problem(const Rational& a1, const Rational& a2) {
  if (a1 <= 0) throw std::invalid_argument("a1 must be positive");
  const Rational s = -a2 / (a1 * a1);
  std::map<std::string, Rational> params{{"a1", a1}, {"a2", a2}};
  return ProblemSpec::exponential(a1, a2, parse_nonlinearity(kTravelingWaveNonlinearity, params, s));
}

ProblemSpec shifted_polynomial_problem(const Rational& a1, const Rational& a2, const Rational& shift) {
  if (a1 <= 0) throw std::invalid_argument("a1 must be positive");
  std::map<std::string, Rational> params{{"a1", a1}, {"a2", a2}, {"L", shift}};
  return ProblemSpec::polynomial(a1, a2, parse_nonlinearity(kShiftedPolynomialNonlinearity, params, Rational(0)));
}

}  // namespace mmvp
