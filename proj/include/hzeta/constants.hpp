#pragma once

#include <vector>

#include "hzeta/estimate.hpp"
#include "hzeta/precision.hpp"
#include "hzeta/rational.hpp"
#include "hzeta/real.hpp"

namespace hzeta {

Real euler_gamma(const PrecisionCtx& ctx);

// Generalized Stieltjes constants gamma(m, a) for m = 0..M, from the limit
// lim_N (sum_{n=0}^{N} log^m(n+a)/(n+a) - log^{m+1}(N+a)/(m+1)) with an
// Euler-Maclaurin correction at the cutoff.
std::vector<Estimate> stieltjes_all(int M, const Rational& a, const PrecisionCtx& ctx);
Real stieltjes(int m, const PrecisionCtx& ctx);
Real stieltjes_gen(int m, const Rational& a, const PrecisionCtx& ctx);

// zeta^(r)(s) for r = 0..R on the real line, s != 1.
std::vector<Estimate> zeta_derivs(const Real& s, int R, const PrecisionCtx& ctx);
Real zeta_real(const Real& s, const PrecisionCtx& ctx);
Real zeta_deriv_real(const Real& s, int r, const PrecisionCtx& ctx);
// zeta^(m)(2) = sum_n (-log n)^m / n^2.
Real zeta_deriv_at_2(int m, const PrecisionCtx& ctx);

// psi^(m)(1): -gamma for m = 0, (-1)^(m+1) m! zeta(m+1) otherwise.
Real polygamma_at_1(int m, const PrecisionCtx& ctx);

// psi(x) for real x that is not a non-positive integer.
Real digamma_real(const Real& x, const PrecisionCtx& ctx);
Real digamma(const Rational& a, const PrecisionCtx& ctx);

namespace detail {
// Stieltjes constants with an explicit cutoff N (for cross-checks).
std::vector<Estimate> stieltjes_with_cutoff(int M, const Rational& a, long N, long bits);
// zeta derivatives with an explicit direct-sum length N.
std::vector<Estimate> zeta_derivs_with_cutoff(const Real& s, int R, long N, long bits);
}  // namespace detail

}  // namespace hzeta
