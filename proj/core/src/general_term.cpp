#include "mmvp/general_term.hpp"

#include <cmath>
#include <string>

#include "mmvp/errors.hpp"

namespace mmvp {

double GeneralTerm::lambda_value() const { return std::sqrt(static_cast<double>(to_long_double(s))); }

double GeneralTerm::amplitude_value() const {
  return static_cast<double>(amplitude.to_long_double(lambda_value()));
}

double GeneralTerm::ratio_value() const { return static_cast<double>(ratio.to_long_double(lambda_value())); }

QuadCoeff general_term_coefficient(const GeneralTerm& gt, unsigned k) {
  return gt.amplitude * Rational(k + 1) * gt.ratio.pow(k);
}

namespace {

std::pair<QuadCoeff, int> single_exponential(const ExpPoly& u, unsigned k) {
  if (!u.is_monomial()) {
    throw PatternMismatch("iterate " + std::to_string(k) + " is not a single exponential term");
  }
  const auto& [key, coeff] = *u.terms().begin();
  if (key.power != 0 || key.rate == 0) {
    throw PatternMismatch("iterate " + std::to_string(k) + " is not a pure exponential");
  }
  return {coeff, key.rate};
}

}  // namespace

GeneralTerm detect_general_term(const SeriesSolution& series) {
  const auto& it = series.iterates;
  if (it.size() < 2) throw PatternMismatch("insufficient data: need at least two iterates");

  auto [a, r0] = single_exponential(it[0], 0);
  if (r0 != 1 && r0 != -1) throw PatternMismatch("seed rate must be +-lambda");
  auto [c1, r1] = single_exponential(it[1], 1);
  if (r1 != 2 * r0) throw PatternMismatch("iterate 1 rate breaks the progression");

  GeneralTerm gt;
  gt.amplitude = a;
  gt.ratio = c1 / (a * Rational(2));
  gt.rate = r0;
  gt.s = series.problem.s();

  for (unsigned k = 2; k < it.size(); ++k) {
    auto [ck, rk] = single_exponential(it[k], k);
    if (rk != static_cast<int>(k + 1) * r0) {
      throw PatternMismatch("iterate " + std::to_string(k) + " rate breaks the progression");
    }
    if (!(ck == general_term_coefficient(gt, k))) {
      throw PatternMismatch("iterate " + std::to_string(k) + " violates (k+1) q^k law");
    }
  }
  return gt;
}

}  // namespace mmvp
