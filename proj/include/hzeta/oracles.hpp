#pragma once

#include <functional>
#include <vector>

#include "hzeta/estimate.hpp"
#include "hzeta/precision.hpp"
#include "hzeta/quadrature.hpp"
#include "hzeta/rational.hpp"
#include "hzeta/real.hpp"

namespace hzeta {

struct TailEstimate {
    Real value;
    Real tail_bound;
    long terms_used = 0;
};

// Direct Dirichlet sums for s > 1 (tails by Euler-Maclaurin).
TailEstimate zeta_A_series(long k, const Real& s, const PrecisionCtx& ctx);
// zeta_H(s, a) = sum_{n>=0} H_n(a) (n+a)^-s with H_n(a) = sum_{j=0}^n 1/(j+a).
TailEstimate zeta_H_series(const Real& s, const Rational& a, const PrecisionCtx& ctx);
TailEstimate zeta_O_series(const Real& s, const PrecisionCtx& ctx);
TailEstimate eta_H_series(const Real& s, const PrecisionCtx& ctx);
TailEstimate eta_Hminus_series(const Real& s, const PrecisionCtx& ctx);
// S(s) = sum_{n>=1} H_n (n+1/2)^-s.
TailEstimate s_half_series(const Real& s, const PrecisionCtx& ctx);

// sum_{n<=x} A_n(k) log^m n / n - (1/k) log^{m+2}x/(m+2) - (gamma/k) log^{m+1}x/(m+1),
// in double precision with a fixed-chunk reduction.
Real gamma_A_limit(long k, int m, long x_max, const PrecisionCtx& ctx, Exec exec = Exec::parallel);

Rational partial_sum_A(long x, long k);
Real partial_sum_A_real(long x, long k, const PrecisionCtx& ctx);
Real c_k_constant(long k, const PrecisionCtx& ctx);
// Partial sum minus (x/k) log x + (x/k)(gamma - 1) + C_k.
Real e_check(long x, long k, const PrecisionCtx& ctx);

// v-th s-derivative at s = 1 of sum (-1)^{n-1} H_n n^-s (and of the H_n^- analogue):
// direct sum below N plus an Euler-Boole tail.
TailEstimate eta_H_direct_deriv(int v, long N, const PrecisionCtx& ctx);
TailEstimate eta_Hminus_direct_deriv(int v, long N, const PrecisionCtx& ctx);

// zeta_A(k)(s) on the real line from the integral representation, s > -M-1.
Estimate zeta_A_continued(long k, const Real& s, int M, const PrecisionCtx& ctx);

namespace detail {

struct PsiTerm {
    Rational beta, mu, h;
};

// sum_{q>=0} scale * N(q) * (-log(lambda w))^v (lambda w)^-s, w = q + offset, where
// N(q) = alpha + sum_i beta_i psi(mu_i w + h_i). `numerator` is called for
// q = 0, 1, 2, ... in order and must return N(q).
struct DigammaSeries {
    Rational offset;
    long lambda = 1;
    Real alpha;
    std::vector<PsiTerm> terms;
    Real scale;
    std::function<Real(long q)> numerator;
};

// Values for v = 0..V, with the direct part cut at q = Q.
std::vector<Estimate> sum_digamma_series(const DigammaSeries& series, const Real& s, int V, long Q,
                                         const PrecisionCtx& ctx);

// Euler-Boole tail weights sum_{m>=0} (-1)^m m^i (Abel sense), i = 0..I.
std::vector<Rational> boole_weights(int I);

}  // namespace detail

}  // namespace hzeta
