#include "hzeta/constants.hpp"

#include <algorithm>
#include <cmath>

#include "hzeta/combinatorics.hpp"
#include "hzeta/error.hpp"
#include "hzeta/euler_maclaurin.hpp"

namespace hzeta {

Real euler_gamma(const PrecisionCtx& ctx) { return Real::euler(ctx.working_bits()); }

namespace detail {

std::vector<Estimate> stieltjes_with_cutoff(int M, const Rational& a, long N, long bits) {
    if (M < 0) throw DomainError("stieltjes order must be non-negative");
    if (a.sign() <= 0) throw DomainError("stieltjes shift must be positive");
    const Real aR(a, bits);
    const Real tol = ldexp(Real(1L, bits), -bits + 8);
    std::vector<Real> sums(static_cast<size_t>(M) + 1, Real(0L, bits));
    for (long n = 0; n < N; ++n) {
        Real x = aR + n;
        Real L = log(x);
        Real t = 1L / x;
        for (int m = 0; m <= M; ++m) {
            sums[static_cast<size_t>(m)] += t;
            t *= L;
        }
    }
    const Real W = aR + N;
    const Real LW = log(W);
    const Real one(1L, bits);
    std::vector<Estimate> out;
    for (int m = 0; m <= M; ++m) {
        std::vector<Real> poly(static_cast<size_t>(m) + 1, Real(0L, bits));
        poly[static_cast<size_t>(m)] = one;
        Estimate e = em_endpoint(one, W, std::move(poly), tol);
        Real head = pow(LW, static_cast<long>(m + 1)) / static_cast<long>(m + 1);
        Real v = sums[static_cast<size_t>(m)] - head + e.value;
        // rounding in the direct sum scales with its magnitude
        Real round = ldexp(abs(sums[static_cast<size_t>(m)]) + abs(head), 6 - bits);
        out.push_back({v, e.error + round});
    }
    return out;
}

std::vector<Estimate> zeta_derivs_with_cutoff(const Real& s, int R, long N, long bits) {
    const Real sb = s.at_prec(bits);
    const Real tol = ldexp(Real(1L, bits), -bits + 8);
    std::vector<Real> sums(static_cast<size_t>(R) + 1, Real(0L, bits));
    Real maxterm(0L, bits);
    for (long n = 1; n < N; ++n) {
        Real nl = log(Real(n, bits));
        Real t = exp(-(sb * nl));
        if (abs(t) > maxterm) maxterm = abs(t);
        Real ml = -nl;
        for (int r = 0; r <= R; ++r) {
            sums[static_cast<size_t>(r)] += t;
            t *= ml;
        }
    }
    auto tail = hurwitz_tail(sb, Real(N, bits), R, tol);
    std::vector<Estimate> out;
    const Real LN = log(Real(N, bits));
    for (int r = 0; r <= R; ++r) {
        Real v = sums[static_cast<size_t>(r)] + tail[static_cast<size_t>(r)].value;
        Real round = ldexp(maxterm * pow(LN + 1L, static_cast<long>(r)) * N + abs(tail[static_cast<size_t>(r)].value), 6 - bits);
        out.push_back({v, tail[static_cast<size_t>(r)].error + round});
    }
    return out;
}

}  // namespace detail

namespace {

long stieltjes_cutoff(const PrecisionCtx& ctx) { return std::max(40L, static_cast<long>(ctx.working_digits())); }

}  // namespace

std::vector<Estimate> stieltjes_all(int M, const Rational& a, const PrecisionCtx& ctx) {
    const long N = stieltjes_cutoff(ctx);
    // log^M(N) cancels in the limit; carry that many extra digits
    double lw = std::log(static_cast<double>(N) + a.to_double());
    int extra = static_cast<int>(std::ceil(M * std::log10(std::max(1.0, lw)))) + 5;
    const long bits = bits_for_digits(ctx.working_digits() + extra);
    auto v = detail::stieltjes_with_cutoff(M, a, N, bits);
    for (auto& e : v) {
        e.value = e.value.at_prec(ctx.working_bits());
        e.error = e.error + ldexp(abs(e.value), 2 - ctx.working_bits());
    }
    return v;
}

Real stieltjes(int m, const PrecisionCtx& ctx) { return stieltjes_all(m, Rational(1), ctx)[static_cast<size_t>(m)].value; }

Real stieltjes_gen(int m, const Rational& a, const PrecisionCtx& ctx) { return stieltjes_all(m, a, ctx)[static_cast<size_t>(m)].value; }

std::vector<Estimate> zeta_derivs(const Real& s, int R, const PrecisionCtx& ctx) {
    if (R < 0) throw DomainError("derivative order must be non-negative");
    if (cmp(s, 1L) == 0) throw PoleError("zeta has a pole at s = 1");
    const double sd = s.to_double();
    const long N = std::max(30L, static_cast<long>(ctx.working_digits() + std::ceil(std::fabs(sd)) + 2 * R));
    // negative s: the direct sum grows like N^(1-s) and cancels against the tail
    double growth = std::max(0.0, 1.0 - sd) * std::log10(static_cast<double>(N)) + R * std::log10(std::log(static_cast<double>(N)));
    int extra = static_cast<int>(std::ceil(std::max(0.0, growth))) + 5;
    const long bits = bits_for_digits(ctx.working_digits() + extra);
    auto v = detail::zeta_derivs_with_cutoff(s, R, N, bits);
    for (auto& e : v) {
        e.value = e.value.at_prec(ctx.working_bits());
        e.error = e.error + ldexp(abs(e.value), 2 - ctx.working_bits());
    }
    return v;
}

Real zeta_real(const Real& s, const PrecisionCtx& ctx) { return zeta_derivs(s, 0, ctx)[0].value; }

Real zeta_deriv_real(const Real& s, int r, const PrecisionCtx& ctx) { return zeta_derivs(s, r, ctx)[static_cast<size_t>(r)].value; }

Real zeta_deriv_at_2(int m, const PrecisionCtx& ctx) {
    if (m < 0) throw DomainError("derivative order must be non-negative");
    return zeta_derivs(Real(2L, ctx.working_bits()), m, ctx)[static_cast<size_t>(m)].value;
}

Real polygamma_at_1(int m, const PrecisionCtx& ctx) {
    if (m < 0) throw DomainError("polygamma order must be non-negative");
    if (m == 0) return -euler_gamma(ctx);
    Real z = zeta_real(Real(static_cast<long>(m + 1), ctx.working_bits()), ctx);
    Real f(Rational(factorial(m)), ctx.working_bits());
    Real r = f * z;
    return m % 2 == 1 ? r : -r;
}

Real digamma_real(const Real& x, const PrecisionCtx& ctx) {
    const long bits = ctx.working_bits() + 16;
    Real z = x.at_prec(bits);
    if (z.is_integer() && z <= 0L) throw PoleError("digamma has a pole at non-positive integers");
    // asymptotic series needs |z| beyond about 0.4 * digits
    const long lift = std::max(20L, static_cast<long>(0.5 * ctx.working_digits()) + 10);
    Real shift(0L, bits);
    while (z < lift) {
        shift += 1L / z;
        z += 1L;
    }
    Real s = log(z) - 1L / (2L * z);
    const Real z2inv = 1L / (z * z);
    Real zp = z2inv;
    const Real tol = ldexp(Real(1L, bits), -bits);
    for (long j = 1; j < 500; ++j) {
        Real term = zp * (bernoulli_number(2 * j) / Rational(2 * j));
        s -= term;
        if (abs(term) < tol * abs(s)) return (s - shift).at_prec(ctx.working_bits());
        zp *= z2inv;
    }
    throw NonConvergence("digamma asymptotic series did not converge");
}

Real digamma(const Rational& a, const PrecisionCtx& ctx) {
    if (a.is_integer() && a.sign() <= 0) throw PoleError("digamma has a pole at non-positive integers");
    return digamma_real(Real(a, ctx.working_bits() + 16), ctx);
}

}  // namespace hzeta
