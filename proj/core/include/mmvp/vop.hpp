#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmvp/adomian.hpp"

namespace mmvp {

enum class OperatorMode {
  Exponential,  ///< a1^2 U'''' + a2 U'',  a2 < 0, lambda^2 = -a2/a1^2
  Polynomial,   ///< U''''  (rescaled operator, s = 0)
};

/// Constant-coefficient fourth-order problem L[U] = N[U].
class ProblemSpec {
 public:
  /// Throws std::invalid_argument unless a1 > 0 and a2 < 0. A positive a2 has
  /// a trigonometric fundamental set that this engine does not represent.
  static ProblemSpec exponential(Rational a1, Rational a2, NonlinearitySpec nonlinearity);
  /// D^4 operator; a1, a2 are kept only as metadata of the nonlinearity.
  static ProblemSpec polynomial(Rational a1, Rational a2, NonlinearitySpec nonlinearity);

  OperatorMode mode() const { return mode_; }
  const Rational& a1() const { return a1_; }
  const Rational& a2() const { return a2_; }
  /// lambda^2: -a2/a1^2 in exponential mode, 0 in polynomial mode.
  const Rational& s() const { return s_; }
  unsigned order() const { return 4; }
  /// Leading coefficient P0 (a1^2, or 1 in polynomial mode).
  QuadCoeff p0() const;
  /// Coefficient of U'' (a2, or 0 in polynomial mode).
  QuadCoeff p2() const;
  const NonlinearitySpec& nonlinearity() const { return nonlinearity_; }

 private:
  ProblemSpec(OperatorMode mode, Rational a1, Rational a2, Rational s, NonlinearitySpec n);

  OperatorMode mode_;
  Rational a1_;
  Rational a2_;
  Rational s_;
  NonlinearitySpec nonlinearity_;
};

/// Fundamental solutions with their Wronskian and the minors W_j obtained by
/// deleting the last row and the j-th column.
struct FundamentalSet {
  std::vector<ExpPoly> solutions;
  ExpPoly wronskian;
  std::vector<ExpPoly> minors;
};

/// Scheme p = 1/2 feeds A_{k-1} into iterate k; p = 1 feeds A_{k-2}.
enum class Scheme { PHalf, POne };

inline unsigned scheme_offset(Scheme s) { return s == Scheme::PHalf ? 1u : 2u; }

/// Fundamental-solution multiple left in a particular solution.
struct ResonantTerm {
  unsigned iterate = 0;
  TermKey key;
};

struct SeriesSolution {
  ProblemSpec problem;
  Scheme scheme = Scheme::PHalf;
  std::vector<ExpPoly> iterates;
  std::string seed_description;
  std::vector<ResonantTerm> resonant_terms;
};

/// Symbolic determinant of the square matrix rows[r][c].
ExpPoly determinant(const std::vector<std::vector<ExpPoly>>& rows);

/// Exponential: {e^{-lambda xi}, e^{lambda xi}, xi, 1}; polynomial: {xi^3, xi^2, xi, 1}.
FundamentalSet fundamental_set(const ProblemSpec& spec);

/// P0 f'''' + P2 f''.
ExpPoly apply_operator(const ProblemSpec& spec, const ExpPoly& f);

/// y = sum_j (-1)^(n-j) y_j * int F W_j / (P0 W), integration constants zero.
ExpPoly particular_solution(const FundamentalSet& fs, const ExpPoly& forcing, const QuadCoeff& p0);

/// sum_j c_j * y_j.
ExpPoly combine_fundamental(const FundamentalSet& fs, std::span<const Rational> constants);

/// U0 = c e^{-direction * lambda xi}; direction +1 decays as xi -> +inf.
ExpPoly decaying_seed(const ProblemSpec& spec, const QuadCoeff& c, int direction);

/// V0 = v1 xi^2 + v0.
ExpPoly polynomial_seed(const Rational& v0, const Rational& v1);

/// Runs the recursion. One seed element selects p = 1/2, two select p = 1.
/// Every seed element must be annihilated by the operator.
SeriesSolution run_recursion(const ProblemSpec& spec, std::span<const ExpPoly> seed, unsigned k_max,
                             std::string seed_description = {});

/// Sum of all iterates.
ExpPoly partial_sum(const SeriesSolution& series, std::optional<unsigned> through = std::nullopt);

}  // namespace mmvp
