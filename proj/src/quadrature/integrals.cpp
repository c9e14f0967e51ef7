#include "hzeta/integrals.hpp"

#include <algorithm>
#include <cmath>

#include "hzeta/combinatorics.hpp"
#include "hzeta/error.hpp"

namespace hzeta {

namespace {

// terms needed for a series with ratio q to reach `digits`
long series_terms(int digits, double q) { return static_cast<long>(std::ceil(digits * std::log(10.0) / -std::log(q))) + 4; }

Real horner(const std::vector<Real>& c, const Real& x, size_t from = 0) {
    Real acc = c.back();
    for (size_t i = c.size() - 1; i-- > from;) {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

PrecisionCtx quad_ctx(const PrecisionCtx& ctx, int M) { return ctx.with_extra(5 + 2 * M); }

std::vector<IntegralResult> finish(std::vector<IntegralResult> r, long bits) {
    for (auto& e : r) {
        e.value = e.value.at_prec(bits);
        e.error_bound = e.error_bound.at_prec(bits) + ldexp(abs(e.value), 2 - bits);
    }
    return r;
}

}  // namespace

KernelF::KernelF(long k, long bits) : k_(k), bits_(bits) {
    if (k < 1) throw DomainError("k must be positive");
    const double pi = 3.141592653589793;
    double r0 = std::min(0.25, pi / static_cast<double>(k));
    r0_ = Real(r0, bits);
    int digits = static_cast<int>(bits * std::log10(2.0)) + 2;
    long n = series_terms(digits, r0 * static_cast<double>(k) / (2 * pi));
    coef_.reserve(static_cast<size_t>(n));
    for (long m = 0; m < n; ++m) {
        Real c(d_coeff(m + 1, k), bits);
        coef_.push_back(m % 2 == 0 ? c : -c);
    }
}

Real KernelF::operator()(const Real& x) const {
    if (x < r0_) return horner(coef_, x);
    Real a = -expm1(-x) / x;
    return -log(a) / expm1(x * k_);
}

std::vector<IntegralResult> integral_i_all(int M, long k, const PrecisionCtx& ctx, Exec exec) {
    if (M < 0) throw DomainError("moment order must be non-negative");
    const PrecisionCtx inner = quad_ctx(ctx, M);
    const long bits = inner.working_bits();
    KernelF F(k, bits);
    QuadratureSpec spec = make_spec(inner, static_cast<double>(k), M);
    spec.tol = ctx.eps();
    auto r = integrate_de(log_moments([&F](const Real& x) { return F(x); }, M), M + 1, spec, bits, exec);
    return finish(std::move(r), ctx.working_bits());
}

IntegralResult integral_i(int m, long k, const PrecisionCtx& ctx) { return integral_i_all(m, k, ctx)[static_cast<size_t>(m)]; }

std::vector<IntegralResult> integral_j_all(int M, const PrecisionCtx& ctx, Exec exec) {
    if (M < 0) throw DomainError("moment order must be non-negative");
    const PrecisionCtx inner = quad_ctx(ctx, M);
    const long bits = inner.working_bits();
    QuadratureSpec spec = make_spec(inner, 1.0, M);
    spec.tol = ctx.eps();
    auto phi = [](const Real& x) {
        Real e = exp(-x);
        Real l = x < 1L ? log(-expm1(-x)) : log1p(-e);
        return l / (1L + e);
    };
    auto r = integrate_de(log_moments(phi, M), M + 1, spec, bits, exec);
    return finish(std::move(r), ctx.working_bits());
}

IntegralResult integral_j(int m, const PrecisionCtx& ctx) { return integral_j_all(m, ctx)[static_cast<size_t>(m)]; }

std::vector<IntegralResult> integral_k_alt_all(int M, const PrecisionCtx& ctx, Exec exec) {
    if (M < 0) throw DomainError("moment order must be non-negative");
    const PrecisionCtx inner = quad_ctx(ctx, M);
    const long bits = inner.working_bits();
    QuadratureSpec spec = make_spec(inner, 1.0, M);
    spec.tol = ctx.eps();
    auto phi = [](const Real& x) {
        Real e = exp(-x);
        return log1p(e) / (1L + e);
    };
    auto r = integrate_de(log_moments(phi, M), M + 1, spec, bits, exec);
    return finish(std::move(r), ctx.working_bits());
}

IntegralResult integral_k_alt(int m, const PrecisionCtx& ctx) { return integral_k_alt_all(m, ctx)[static_cast<size_t>(m)]; }

Estimate mellin_f(const Real& s, long k, int M, const PrecisionCtx& ctx) {
    if (M < 0) throw DomainError("subtraction order must be non-negative");
    if (s <= static_cast<long>(-M - 1)) throw DomainError("mellin_f needs s > -M-1");
    const PrecisionCtx inner = ctx.with_extra(10 + 3 * (M + 1) / 2);
    const long bits = inner.working_bits();
    const Real sb = s.at_prec(bits);
    KernelF F(k, bits);
    const auto& c = F.series();
    // Taylor coefficients of e^x F(x)
    std::vector<Real> g(c.size(), Real(0L, bits));
    {
        std::vector<Real> inv_fact(c.size(), Real(1L, bits));
        for (size_t i = 1; i < c.size(); ++i) inv_fact[i] = inv_fact[i - 1] / static_cast<long>(i);
        for (size_t m = 0; m < c.size(); ++m)
            for (size_t i = 0; i <= m; ++i) g[m] += c[i] * inv_fact[m - i];
    }
    // sum_{m<=M} g_m (s)_m
    Real poly(0L, bits);
    Real rising(1L, bits);
    for (int m = 0; m <= M; ++m) {
        poly += g[static_cast<size_t>(m)] * rising;
        rising *= sb + static_cast<long>(m);
    }
    Estimate result{poly.at_prec(ctx.working_bits()), ldexp(abs(poly), 4 - ctx.working_bits())};
    if (sb.is_integer() && sb <= 0L) return result;

    const size_t M1 = static_cast<size_t>(M) + 1;
    std::vector<Real> head(g.begin(), g.begin() + static_cast<long>(M1));
    const Real sm1 = sb - 1L;
    const Real& r0 = F.switch_radius();
    auto phi = [&](const Real& x) {
        Real L = log(x);
        Real xs = exp(sm1 * L);
        if (x < r0) {
            // e^{-x} sum_{m>M} g_m x^m
            Real tail = horner(g, x, M1) * exp(static_cast<long>(M1) * L);
            return xs * exp(-x) * tail;
        }
        return xs * (F(x) - exp(-x) * horner(head, x));
    };
    const double sd = s.to_double();
    QuadratureSpec spec = make_spec(inner, 1.0, M + 2 + static_cast<int>(std::ceil(std::fabs(sd))));
    spec.tol = ctx.eps();
    IntegralResult I = integrate_de([&phi](const Real& x) { return phi(x); }, spec, inner);
    Real rg = 1L / gamma_fn(sb);
    Real v = I.value * rg;
    result.value = (result.value + v).at_prec(ctx.working_bits());
    result.error = result.error + I.error_bound * abs(rg);
    return result;
}

}  // namespace hzeta
