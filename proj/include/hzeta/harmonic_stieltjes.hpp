#pragma once

#include <string>

#include "hzeta/estimate.hpp"
#include "hzeta/precision.hpp"

namespace hzeta {

// Largest order accepted by the harmonic Stieltjes families.
constexpr int kMaxOrder = 40;

enum class HalfMethod { A, B };

// Principal part c2/(s-1)^2 + c1/(s-1) at s = 1.
struct LaurentHead {
    Real pole_order_2_coeff;
    Real pole_order_1_coeff;
    std::string constant_family;
};

enum class HarmonicFamily { zeta_A, zeta_H, zeta_H_half, zeta_Hminus, zeta_O, s_half };

LaurentHead laurent_head(HarmonicFamily family, long k, const PrecisionCtx& ctx);

// Regular Laurent coefficients at s = 1, all in the convention
// f(s) = head + sum_m (-1)^m c(m)/m! (s-1)^m.
Estimate gamma_A(long k, int m, const PrecisionCtx& ctx);
Estimate gamma_H(int m, const PrecisionCtx& ctx);
// eta_H^(v)(1) and gamma~_H(v) = (-1)^v eta_H^(v)(1).
Estimate eta_H_deriv(int v, const PrecisionCtx& ctx);
Estimate gamma_tilde_H(int v, const PrecisionCtx& ctx);
Estimate eta_Hminus_deriv(int j, const PrecisionCtx& ctx);
// Both methods are always evaluated; throws MethodDisagreement when they
// differ by more than 10 times their combined error bounds.
Estimate gamma_H_half(int m, const PrecisionCtx& ctx, HalfMethod method = HalfMethod::A);
Estimate gamma_Hminus(int m, const PrecisionCtx& ctx);
Estimate gamma_O(int n, const PrecisionCtx& ctx);
Estimate d_coefficient(int n, const PrecisionCtx& ctx);
// sum_{a=1}^k gamma_H(n, a/k), from the gamma_A side of the multiplication formula.
Estimate raabe_gamma_sum(long k, int n, const PrecisionCtx& ctx);

}  // namespace hzeta
