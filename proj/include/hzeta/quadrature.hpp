#pragma once

#include <functional>
#include <vector>

#include "hzeta/precision.hpp"
#include "hzeta/real.hpp"

namespace hzeta {

enum class Exec { serial, parallel };

struct QuadratureSpec {
    Real split_point;   // (0, split] by tanh-sinh, [split, upper_cutoff] by exp-sinh
    int max_level = 12;
    Real tol;           // per component, relative to max(1, |value|)
    Real upper_cutoff;
    int log_power = 0;  // largest power of log x in the integrand (sizes the t-range)
};

struct IntegralResult {
    Real value;
    Real error_bound;
    int levels_used = 0;
};

// Fills `out` (already sized) with the integrand components at x.
using VectorIntegrand = std::function<void(const Real& x, std::vector<Real>& out)>;
using ScalarIntegrand = std::function<Real(const Real& x)>;

// Spec for an integrand decaying like e^(-decay x) log^m x at infinity.
QuadratureSpec make_spec(const PrecisionCtx& ctx, double decay, int log_power);

// Integral over (0, upper_cutoff] of each component. All components share
// nodes; refinement stops when every component has converged.
std::vector<IntegralResult> integrate_de(const VectorIntegrand& f, int components, const QuadratureSpec& spec,
                                         long bits, Exec exec = Exec::parallel);

IntegralResult integrate_de(const ScalarIntegrand& f, const QuadratureSpec& spec, const PrecisionCtx& ctx,
                            Exec exec = Exec::parallel);

// Wraps phi(x) into the moments phi(x) log^v x, v = 0..M.
VectorIntegrand log_moments(std::function<Real(const Real&)> phi, int M);

}  // namespace hzeta
