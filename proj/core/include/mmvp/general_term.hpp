#pragma once

#include "mmvp/vop.hpp"

namespace mmvp {

/// Law U_k = A (k+1) q^k E^{k+1} with E = exp(rate * lambda * xi), rate = +-1.
struct GeneralTerm {
  QuadCoeff amplitude;
  QuadCoeff ratio;
  int rate = -1;
  Rational s{0};

  double amplitude_value() const;
  double ratio_value() const;
  /// Numerical lambda = sqrt(s).
  double lambda_value() const;
};

/// Fits the law by exact ratio tests on every iterate.
/// Throws PatternMismatch for fewer than two iterates, non-monomial
/// iterates, rates off the progression (k+1)*rate, or ratio drift.
GeneralTerm detect_general_term(const SeriesSolution& series);

/// A (k+1) q^k as an exact coefficient.
QuadCoeff general_term_coefficient(const GeneralTerm& gt, unsigned k);

}  // namespace mmvp
