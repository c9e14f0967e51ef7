#pragma once

#include <vector>

#include "hzeta/estimate.hpp"
#include "hzeta/precision.hpp"
#include "hzeta/quadrature.hpp"

namespace hzeta {

// F_k(x) = e^{-kx}/(e^{-kx}-1) log((1-e^{-x})/x); series below a switch radius.
class KernelF {
public:
    KernelF(long k, long bits);
    Real operator()(const Real& x) const;
    // Taylor coefficients of F_k: (-1)^m D_{m+1,k}.
    const std::vector<Real>& series() const { return coef_; }
    const Real& switch_radius() const { return r0_; }

private:
    long k_;
    long bits_;
    Real r0_;
    std::vector<Real> coef_;
};

// i_{v,k} = int_0^inf F_k(x) log^v x dx for v = 0..M.
std::vector<IntegralResult> integral_i_all(int M, long k, const PrecisionCtx& ctx, Exec exec = Exec::parallel);
IntegralResult integral_i(int m, long k, const PrecisionCtx& ctx);

// J_v = int_0^inf log(1-e^{-x})/(1+e^{-x}) log^v x dx for v = 0..M.
std::vector<IntegralResult> integral_j_all(int M, const PrecisionCtx& ctx, Exec exec = Exec::parallel);
IntegralResult integral_j(int m, const PrecisionCtx& ctx);

// K_v = int_0^inf log(1+e^{-x})/(1+e^{-x}) log^v x dx for v = 0..M.
std::vector<IntegralResult> integral_k_alt_all(int M, const PrecisionCtx& ctx, Exec exec = Exec::parallel);
IntegralResult integral_k_alt(int m, const PrecisionCtx& ctx);

// (1/Gamma(s)) int_0^inf x^{s-1} F_k(x) dx, continued to s > -M-1 by
// subtracting e^{-x} T_M(x), T_M the degree-M Taylor polynomial of e^x F_k(x),
// and adding back sum_m c_m (s)_m.
Estimate mellin_f(const Real& s, long k, int M, const PrecisionCtx& ctx);

}  // namespace hzeta
