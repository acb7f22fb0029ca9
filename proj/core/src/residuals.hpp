#pragma once

#include "fullow/types.hpp"

#include <string_view>

namespace fullow::detail {

/// Residual vector of least-squares family `nprob` (1..22, in the
/// benchmark numbering) with m residuals.
Vector residual_vector(int nprob, int m, const Vector& x);

/// Standard starting point of problem `nprob` in dimension n (unscaled).
Vector residual_start(int nprob, int n);

std::string_view residual_name(int nprob);

}  // namespace fullow::detail
