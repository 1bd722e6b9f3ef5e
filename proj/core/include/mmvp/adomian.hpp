#pragma once

#include <span>
#include <vector>

#include "mmvp/nonlinearity.hpp"

namespace mmvp {

enum class AdomianRoute { Definition, Convolution };

/// A_0 ... A_k_max for one nonlinearity and one list of partial solutions.
struct AdomianSeries {
  std::vector<ExpPoly> polys;
  AdomianRoute source = AdomianRoute::Definition;
};

/// A_k = (1/k!) d^k/d eps^k N(sum_l U_l eps^l) at eps = 0.
///
/// The eps-series is built in full as a polynomial with ExpPoly coefficients,
/// differentiated k times formally and evaluated at zero. Requires
/// partials.size() >= k_max + 1.
AdomianSeries adomian_via_definition(const NonlinearitySpec& spec, std::span<const ExpPoly> partials,
                                     unsigned k_max);

/// Cauchy-product form: A_k = sum over i1+...+id = k of prod U_{i_j}^(f_j).
/// Monomials of degree above 3 throw std::invalid_argument.
AdomianSeries adomian_via_convolution(const NonlinearitySpec& spec, std::span<const ExpPoly> partials,
                                      unsigned k_max);

/// Single A_k by convolution; uses partials[0..k] only.
ExpPoly adomian_polynomial(const NonlinearitySpec& spec, std::span<const ExpPoly> partials, unsigned k);

/// max over samples of |sum_{k<=k_max} A_k(xi) - N[sum_{k<=k_max} U_k](xi)|.
long double verify_adomian_sum(const NonlinearitySpec& spec, std::span<const ExpPoly> partials, unsigned k_max,
                               std::span<const long double> xi_samples);

}  // namespace mmvp
