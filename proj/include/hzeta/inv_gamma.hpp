#pragma once

#include <vector>

#include "hzeta/precision.hpp"
#include "hzeta/real.hpp"

namespace hzeta {

// g_m = d^m/ds^m 1/Gamma(s) at s = 1, for m = 0..M.
std::vector<Real> inv_gamma_coeffs(int M, const PrecisionCtx& ctx);

}  // namespace hzeta
