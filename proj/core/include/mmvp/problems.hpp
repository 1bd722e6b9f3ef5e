#pragma once

#include <string_view>

#include "mmvp/vop.hpp"

namespace mmvp {

/// Nonlinearity of a1^2 U'''' + a2 U'' = N[U] for the traveling-wave ODE.
inline constexpr std::string_view kTravelingWaveNonlinearity = "-a1*(U1*U1 + U0*U2)";

/// Same ODE rescaled to V'''' = N[V] around the far-field value L, with the
/// linear a2 term moved into N.
inline constexpr std::string_view kShiftedPolynomialNonlinearity = "-(a2/a1^2)*U2 - (1/a1)*(U1*U1 + (L + U0)*U2)";

/// Exponential-mode problem (requires a1 > 0, a2 < 0).
ProblemSpec traveling_wave_problem(const Rational& a1, const Rational& a2);

/// Polynomial-mode problem for V = U - shift.
ProblemSpec shifted_polynomial_problem(const Rational& a1, const Rational& a2, const Rational& shift);

}  // namespace mmvp
