#pragma once

#include <boost/multiprecision/float128.hpp>

namespace mmvp {

/// Quad precision for finite-difference work where double round-off would
/// swamp the truncation error (fourth differences at h ~ 1e-3).
using HighReal = boost::multiprecision::float128;

}  // namespace mmvp
