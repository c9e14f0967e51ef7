#include "hzeta/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hzeta/combinatorics.hpp"
#include "hzeta/constants.hpp"
#include "hzeta/error.hpp"
#include "hzeta/euler_maclaurin.hpp"
#include "hzeta/integrals.hpp"
#include "hzeta/power_series.hpp"

namespace hzeta {

namespace detail {

std::vector<Estimate> sum_digamma_series(const DigammaSeries& ser, const Real& s, int V, long Q,
                                         const PrecisionCtx& ctx) {
    const long bits = ctx.working_bits();
    const Real sb = s.at_prec(bits);
    const Real zero(0L, bits);
    const Real off(ser.offset, bits);
    const Real lam(ser.lambda, bits);
    const Real llam = log(lam);
    const auto V1 = static_cast<size_t>(V) + 1;

    std::vector<Real> direct(V1, zero);
    Real mag = zero;
    for (long q = 0; q < Q; ++q) {
        Real lw = log(lam * (off + q));
        Real t = ser.scale * ser.numerator(q) * exp(-(sb * lw));
        Real ml = -lw;
        for (size_t v = 0; v < V1; ++v) {
            direct[v] += t;
            mag = max(mag, abs(t));
            t *= ml;
        }
    }

    const Real W = off + Q;
    const Real tol = ldexp(Real(1L, bits), 8 - bits);
    Real A = ser.alpha.at_prec(bits);
    Rational B(0);
    for (const auto& p : ser.terms) {
        A += Real(p.beta, bits) * log(Real(p.mu, bits));
        B += p.beta;
    }
    std::vector<Estimate> T(V1, Estimate::exact(zero));
    const Real ref = max(Real(1L, bits), abs(A) + abs(Real(B, bits)));
    if (!(A.is_zero() && B.is_zero())) {
        auto Z = hurwitz_tail(sb, W, V + 1, tol);
        for (size_t i = 0; i < V1; ++i) T[i] += Z[i] * A - Z[i + 1] * Real(B, bits);
    }
    // psi(mu w + h) ~ log mu + log w + sum_j (-1)^{j+1} B_j(h) / (j mu^j w^j)
    Real remainder = zero;
    Real prev = Real(std::numeric_limits<double>::infinity(), bits);
    const Real target = tol * ref;
    for (long j = 1;; ++j) {
        if (j > 2000) throw NonConvergence("digamma asymptotic tail did not converge");
        Rational c(0);
        for (const auto& p : ser.terms)
            c += p.beta * bernoulli_poly(j, p.h) / (Rational(j) * pow(p.mu, j)) * Rational(j % 2 == 1 ? 1 : -1);
        if (c.is_zero()) continue;
        Real est = abs(Real(c, bits)) * pow(W, -j);
        if (j > 2 && est <= target) {
            remainder = est * W * 4L;
            break;
        }
        if (j > 4 && est > prev) throw NonConvergence("digamma asymptotic tail diverged; raise the cutoff");
        prev = est;
        auto Z = hurwitz_tail(sb + j, W, V, tol);
        for (size_t i = 0; i < V1; ++i) T[i] += Z[i] * c;
    }

    const Real lam_s = exp(-(sb * llam));
    const Real factor = ser.scale * lam_s;
    std::vector<Estimate> out;
    const Real lw_max = abs(log(lam * W)) + 1L;
    for (int v = 0; v <= V; ++v) {
        Estimate tail = Estimate::exact(zero);
        Real mlp(1L, bits);
        for (int i = v; i >= 0; --i) {
            tail += T[static_cast<size_t>(i)] * (Real(Rational(binomial(v, i)), bits) * mlp);
            mlp *= -llam;
        }
        tail = tail * factor;
        Real err = tail.error + abs(factor) * remainder * pow(lw_max, static_cast<long>(v)) +
                   ldexp(mag * Q * pow(lw_max, static_cast<long>(v)), 8 - bits);
        out.emplace_back(direct[static_cast<size_t>(v)] + tail.value, err);
    }
    return out;
}

std::vector<Rational> boole_weights(int I) {
    std::vector<Rational> w;
    for (long i = 0; i <= I; ++i) {
        w.push_back((Rational(1) - pow(Rational(2), i + 1)) * bernoulli_number(i + 1) / Rational(i + 1));
    }
    return w;
}

}  // namespace detail

namespace {

using detail::DigammaSeries;
using detail::PsiTerm;

void require_convergent(const Real& s) {
    if (s <= Real::parse("1.001", s.prec())) throw SlowConvergence("direct summation needs s > 1 + 1e-3");
}

long cutoff(const PrecisionCtx& ctx) { return std::max(50L, static_cast<long>(ctx.working_digits())); }

// Running H_n, advanced on demand.
struct RunningHarmonic {
    long n = 0;
    Real H;
    explicit RunningHarmonic(long bits) : H(0L, bits) {}
    const Real& at(long target) {
        while (n < target) {
            ++n;
            H += Real(1L, H.prec()) / n;
        }
        return H;
    }
};

// Running H_n^- = sum (-1)^{k-1}/k.
struct RunningSkew {
    long n = 0;
    Real H;
    explicit RunningSkew(long bits) : H(0L, bits) {}
    const Real& at(long target) {
        while (n < target) {
            ++n;
            Real t = Real(1L, H.prec()) / n;
            if (n % 2 == 1) {
                H += t;
            } else {
                H -= t;
            }
        }
        return H;
    }
};

TailEstimate finish(const std::vector<Estimate>& parts, long terms, const PrecisionCtx& ctx) {
    const long bits = ctx.working_bits();
    Real v(0L, parts.front().value.prec());
    Real e(0L, parts.front().value.prec());
    for (const auto& p : parts) {
        v += p.value;
        e += p.error;
    }
    Real out = v.at_prec(bits);
    return {out, e.at_prec(bits) + ldexp(abs(out), 1 - bits), terms};
}

Real psi_rational(const Rational& a, const PrecisionCtx& ctx) { return digamma(a, ctx); }

// Taylor coefficients of psi(z0 + t), t^0..t^I, from the asymptotic expansion.
PowerSeries digamma_shift(const Real& z0, int I) {
    const long bits = z0.prec();
    PowerSeries out = PowerSeries::log_shift(z0, I);
    out -= PowerSeries::inv_power_shift(z0, 1, I) * Real(Rational(1, 2), bits);
    const Real tol = ldexp(Real(1L, bits), -bits - 4);
    for (long j = 1; j < 1000; ++j) {
        Rational c = bernoulli_number(2 * j) / Rational(2 * j);
        if (abs(Real(c, bits)) * pow(z0, -2 * j) < tol) return out;
        out -= PowerSeries::inv_power_shift(z0, static_cast<int>(2 * j), I) * Real(c, bits);
    }
    throw NonConvergence("digamma expansion point too small");
}

// Taylor coefficients of (-log x)^v / x at x = N.
PowerSeries log_weight(const Real& N, int v, int I) {
    PowerSeries ml = PowerSeries::log_shift(N, I) * Real(-1L, N.prec());
    PowerSeries out = PowerSeries::inv_power_shift(N, 1, I);
    for (int i = 0; i < v; ++i) out = out * ml;
    return out;
}

// Order needed for the Boole tail at N to reach `digits`.
int boole_order(long N, int v, int digits) {
    const double lnN = std::log(static_cast<double>(N)) + 1;
    for (int i = 1; i < 4000; ++i) {
        // |w_i| ~ 4 i!/pi^{i+1}, |f^{(i)}(N)/i!| ~ N^{-1-i} log^v N
        double lg = std::log(4.0) + std::lgamma(i + 1.0) - (i + 1) * std::log(M_PI * static_cast<double>(N)) +
                    v * std::log(lnN);
        if (i > 2 && lg < -digits * std::log(10.0)) return i + 2;
    }
    throw SlowConvergence("Euler-Boole tail stalls; increase N");
}

// (-1)^{N-1} sum_i w_i phi_i and a bound from the last non-zero term.
Estimate boole_tail(const PowerSeries& phi, long N) {
    const long bits = phi.bits();
    const int I = phi.order();
    auto w = detail::boole_weights(I);
    Real sum(0L, bits);
    Real last(0L, bits);
    for (int i = 0; i <= I; ++i) {
        Real t = phi[i] * Real(w[static_cast<size_t>(i)], bits);
        sum += t;
        if (!t.is_zero()) last = abs(t);
    }
    if (N % 2 == 0) sum = -sum;
    return {sum, last * 2L};
}

void check_direct_args(int v, long N) {
    if (v < 0 || v > 6) throw DomainError("derivative order must be in 0..6");
    if (N < 1000) throw DomainError("direct alternating sums need N >= 1000");
}

}  // namespace

TailEstimate zeta_A_series(long k, const Real& s, const PrecisionCtx& ctx) {
    if (k < 1) throw DomainError("k must be positive");
    require_convergent(s);
    const PrecisionCtx inner = ctx.with_extra(5);
    const long bits = inner.working_bits();
    const long Q = cutoff(inner);
    std::vector<Estimate> parts;
    for (long r = 1; r <= k; ++r) {
        Real acc(0L, bits);
        DigammaSeries ser;
        ser.offset = Rational(r, k);
        ser.lambda = k;
        ser.alpha = -psi_rational(Rational(r, k), inner) / k;
        ser.terms = {{Rational(1, k), Rational(1), Rational(1)}};
        ser.scale = Real(1L, bits);
        ser.numerator = [&acc, k, r](long q) {
            acc += Real(1L, acc.prec()) / (q * k + r);
            return acc;
        };
        parts.push_back(detail::sum_digamma_series(ser, s, 0, Q, inner)[0]);
    }
    return finish(parts, Q * k, ctx);
}

TailEstimate zeta_H_series(const Real& s, const Rational& a, const PrecisionCtx& ctx) {
    if (a.sign() <= 0) throw DomainError("zeta_H(s, a) needs a > 0");
    require_convergent(s);
    const PrecisionCtx inner = ctx.with_extra(5);
    const long bits = inner.working_bits();
    const long Q = cutoff(inner);
    const Real aR(a, bits);
    Real acc(0L, bits);
    DigammaSeries ser;
    ser.offset = a;
    ser.alpha = -psi_rational(a, inner);
    ser.terms = {{Rational(1), Rational(1), Rational(1)}};
    ser.scale = Real(1L, bits);
    ser.numerator = [&acc, &aR](long q) {
        acc += 1L / (aR + q);
        return acc;
    };
    return finish(detail::sum_digamma_series(ser, s, 0, Q, inner), Q, ctx);
}

TailEstimate zeta_O_series(const Real& s, const PrecisionCtx& ctx) {
    require_convergent(s);
    const PrecisionCtx inner = ctx.with_extra(5);
    const long bits = inner.working_bits();
    const long Q = cutoff(inner);
    Real acc(0L, bits);
    DigammaSeries ser;
    ser.offset = Rational(1);
    ser.alpha = -psi_rational(Rational(1, 2), inner) / 2L;
    ser.terms = {{Rational(1, 2), Rational(1), Rational(1, 2)}};
    ser.scale = Real(1L, bits);
    ser.numerator = [&acc](long q) {
        acc += Real(1L, acc.prec()) / (2 * (q + 1) - 1);
        return acc;
    };
    return finish(detail::sum_digamma_series(ser, s, 0, Q, inner), Q, ctx);
}

TailEstimate eta_H_series(const Real& s, const PrecisionCtx& ctx) {
    require_convergent(s);
    const PrecisionCtx inner = ctx.with_extra(5);
    const long bits = inner.working_bits();
    const long Q = cutoff(inner);
    std::vector<Estimate> parts;
    for (long r = 1; r <= 2; ++r) {
        RunningHarmonic H(bits);
        DigammaSeries ser;
        ser.offset = Rational(r, 2);
        ser.lambda = 2;
        ser.alpha = euler_gamma(inner);
        ser.terms = {{Rational(1), Rational(2), Rational(1)}};
        ser.scale = Real(r == 1 ? 1L : -1L, bits);
        ser.numerator = [&H, r](long q) { return H.at(2 * q + r); };
        parts.push_back(detail::sum_digamma_series(ser, s, 0, Q, inner)[0]);
    }
    return finish(parts, 2 * Q, ctx);
}

TailEstimate eta_Hminus_series(const Real& s, const PrecisionCtx& ctx) {
    require_convergent(s);
    const PrecisionCtx inner = ctx.with_extra(5);
    const long bits = inner.working_bits();
    const long Q = cutoff(inner);
    const Real l2 = Real::ln2(bits);
    std::vector<Estimate> parts;
    for (long r = 1; r <= 2; ++r) {
        RunningSkew H(bits);
        DigammaSeries ser;
        ser.offset = Rational(r, 2);
        ser.lambda = 2;
        ser.alpha = r == 1 ? l2 : -l2;
        ser.terms = {{Rational(1, 2), Rational(1), Rational(1)}, {Rational(-1, 2), Rational(1), Rational(1, 2)}};
        ser.scale = Real(1L, bits);
        ser.numerator = [&H, r](long q) {
            const Real& h = H.at(2 * q + r);
            return r == 1 ? h : -h;
        };
        parts.push_back(detail::sum_digamma_series(ser, s, 0, Q, inner)[0]);
    }
    return finish(parts, 2 * Q, ctx);
}

TailEstimate s_half_series(const Real& s, const PrecisionCtx& ctx) {
    require_convergent(s);
    const PrecisionCtx inner = ctx.with_extra(5);
    const long bits = inner.working_bits();
    const long Q = cutoff(inner);
    RunningHarmonic H(bits);
    DigammaSeries ser;
    ser.offset = Rational(3, 2);
    ser.alpha = euler_gamma(inner);
    ser.terms = {{Rational(1), Rational(1), Rational(1, 2)}};
    ser.scale = Real(1L, bits);
    ser.numerator = [&H](long q) { return H.at(q + 1); };
    return finish(detail::sum_digamma_series(ser, s, 0, Q, inner), Q, ctx);
}

Real gamma_A_limit(long k, int m, long x_max, const PrecisionCtx& ctx, Exec exec) {
    if (k < 1) throw DomainError("k must be positive");
    if (m < 0) throw DomainError("m must be non-negative");
    if (x_max < 10000) throw DomainError("the limit oracle needs x_max >= 10^4");
    constexpr long kChunk = 1L << 16;
    const long chunks = (x_max + kChunk - 1) / kChunk;
    std::vector<long double> partial(static_cast<size_t>(chunks), 0.0L);

    auto run_chunk = [&](long c) {
        const long lo = c * kChunk + 1;
        const long hi = std::min(x_max, lo + kChunk - 1);
        std::vector<long double> ring(static_cast<size_t>(k));
        long double sum = 0.0L;
        for (long n = lo; n <= hi; ++n) {
            long double& a = ring[static_cast<size_t>((n - lo) % k)];
            if (n < lo + k) {
                a = 0.0L;
                for (long v = n; v >= 1; v -= k) a += 1.0L / static_cast<long double>(v);
            } else {
                a += 1.0L / static_cast<long double>(n);
            }
            long double ln = std::log(static_cast<long double>(n));
            long double lp = 1.0L;
            for (int i = 0; i < m; ++i) lp *= ln;
            sum += a * lp / static_cast<long double>(n);
        }
        partial[static_cast<size_t>(c)] = sum;
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        for (long c = 0; c < chunks; ++c) run_chunk(c);
    }
    long double total = 0.0L;
    for (long double p : partial) total += p;
    const long double lx = std::log(static_cast<long double>(x_max));
    const long double g = 0.57721566490153286060651209008240243L;
    const long double kk = static_cast<long double>(k);
    total -= std::pow(lx, m + 2) / (kk * (m + 2)) + g * std::pow(lx, m + 1) / (kk * (m + 1));
    return Real(static_cast<double>(total), ctx.working_bits());
}

Rational partial_sum_A(long x, long k) {
    if (x < 1 || k < 1) throw DomainError("partial_sum_A needs x >= 1, k >= 1");
    Rational s(0);
    for (long v = 1; v <= x; ++v) s += Rational((x - v) / k + 1, v);
    return s;
}

Real partial_sum_A_real(long x, long k, const PrecisionCtx& ctx) {
    if (x < 1 || k < 1) throw DomainError("partial_sum_A needs x >= 1, k >= 1");
    const long bits = ctx.working_bits() + 32;
    Real s(0L, bits);
    for (long v = 1; v <= x; ++v) s += Real((x - v) / k + 1, bits) / v;
    return s.at_prec(ctx.working_bits());
}

Real c_k_constant(long k, const PrecisionCtx& ctx) {
    if (k < 1) throw DomainError("k must be positive");
    const long bits = ctx.working_bits();
    const Real g = euler_gamma(ctx);
    Real c = Real(Rational(1, 2), bits) + g / k - g - log(Real(k, bits)) * Real(Rational(3 + k, 2 * k), bits);
    Real s(0L, bits);
    for (long j = 1; j <= k; ++j) s -= digamma(Rational(j, k), ctx) * j;
    return c + s / (k * k);
}

Real e_check(long x, long k, const PrecisionCtx& ctx) {
    const long bits = ctx.working_bits();
    const Real X(x, bits);
    const Real g = euler_gamma(ctx);
    return partial_sum_A_real(x, k, ctx) - X / k * log(X) - X / k * (g - 1L) - c_k_constant(k, ctx);
}

TailEstimate eta_H_direct_deriv(int v, long N, const PrecisionCtx& ctx) {
    check_direct_args(v, N);
    const PrecisionCtx inner = ctx.with_extra(8);
    const long bits = inner.working_bits();
    Real direct(0L, bits);
    Real H(0L, bits);
    for (long n = 1; n < N; ++n) {
        H += Real(1L, bits) / n;
        Real t = H / n * pow(-log(Real(n, bits)), static_cast<long>(v));
        if (n % 2 == 1) {
            direct += t;
        } else {
            direct -= t;
        }
    }
    const int I = boole_order(N, v, inner.working_digits());
    const Real NR(N, bits);
    PowerSeries h = digamma_shift(NR + 1L, I);
    h[0] += euler_gamma(inner);
    Estimate tail = boole_tail(h * log_weight(NR, v, I), N);
    Real value = (direct + tail.value).at_prec(ctx.working_bits());
    return {value, tail.error + ldexp(abs(value), 8 - bits) * N, N};
}

TailEstimate eta_Hminus_direct_deriv(int v, long N, const PrecisionCtx& ctx) {
    check_direct_args(v, N);
    const PrecisionCtx inner = ctx.with_extra(8);
    const long bits = inner.working_bits();
    const Real l2 = Real::ln2(bits);
    // H_n^- = ln2 + (-1)^{n-1} beta_n: alternating ln2 part plus a smooth beta part
    Real direct(0L, bits);
    for (long n = 1; n < N; ++n) {
        Real t = pow(-log(Real(n, bits)), static_cast<long>(v)) / n;
        if (n % 2 == 1) {
            direct += t;
        } else {
            direct -= t;
        }
    }
    const int I = boole_order(N, v, inner.working_digits());
    Estimate tail = boole_tail(log_weight(Real(N, bits), v, I), N);
    Real alt = (direct + tail.value) * l2;

    RunningSkew Hm(bits);
    DigammaSeries ser;
    ser.offset = Rational(1);
    ser.alpha = Real(0L, bits);
    ser.terms = {{Rational(1, 2), Rational(1, 2), Rational(1)}, {Rational(-1, 2), Rational(1, 2), Rational(1, 2)}};
    ser.scale = Real(1L, bits);
    ser.numerator = [&Hm, &l2](long q) {
        const long n = q + 1;
        Real d = Hm.at(n) - l2;
        return n % 2 == 1 ? d : -d;
    };
    const long Q = std::max(N, cutoff(inner));
    Estimate beta = detail::sum_digamma_series(ser, Real(1L, bits), v, Q, inner)[static_cast<size_t>(v)];
    Real value = (alt + beta.value).at_prec(ctx.working_bits());
    return {value, tail.error * l2 + beta.error + ldexp(abs(value), 8 - bits) * N, N + Q};
}

Estimate zeta_A_continued(long k, const Real& s, int M, const PrecisionCtx& ctx) {
    if (k < 1) throw DomainError("k must be positive");
    const double sd = s.to_double();
    const double guard = 1e-4;
    if (std::fabs(sd - 1) < guard || std::fabs(sd) < guard)
        throw DomainError("zeta_A_continued: s too close to a pole");
    if (sd < 0) {
        double odd = 2 * std::round((sd - 1) / 2) + 1;
        if (std::fabs(sd - odd) < guard) throw DomainError("zeta_A_continued: s too close to a pole");
    }
    const double near_int = std::fabs(sd - std::round(sd));
    int extra = 5;
    if (near_int > 0 && near_int < 0.5) extra += static_cast<int>(std::ceil(-std::log10(near_int)));
    if (std::fabs(sd - 1) < 0.5) extra += static_cast<int>(std::ceil(-2 * std::log10(std::fabs(sd - 1))));
    const PrecisionCtx inner = ctx.with_extra(extra);
    const long bits = inner.working_bits();
    const Real sb = s.at_prec(bits);

    Estimate mf = mellin_f(sb, k, M, inner);
    Estimate zs1 = zeta_derivs(sb + 1L, 0, inner)[0];
    Estimate total = mf + zs1;
    const bool neg_even = sb.is_integer() && sb < 0L;
    if (!neg_even) {
        // the bracket vanishes at s = -2m
        auto z = zeta_derivs(sb, 1, inner);
        Estimate psi = Estimate::of(digamma_real(sb, inner));
        Estimate lk = Estimate::of(log(Real(k, bits)));
        Estimate bracket = psi * z[0] + z[1] - z[0] * lk;
        total -= bracket * exp(-(sb * log(Real(k, bits))));
    }
    Real v = total.value.at_prec(ctx.working_bits());
    return {v, total.error.at_prec(ctx.working_bits()) + ldexp(abs(v), 2 - ctx.working_bits())};
}

}  // namespace hzeta
