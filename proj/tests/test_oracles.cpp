#include <doctest.h>

#include "hzeta/combinatorics.hpp"
#include "hzeta/constants.hpp"
#include "hzeta/error.hpp"
#include "hzeta/harmonic_stieltjes.hpp"
#include "hzeta/integrals.hpp"
#include "hzeta/oracles.hpp"
#include "hzeta/special_values.hpp"
#include "support.hpp"

using namespace hzeta;
using testing::close;
using testing::lit;

TEST_CASE("direct series against classical closed forms") {
    PrecisionCtx ctx(40);
    const long bits = ctx.working_bits();
    const Real two(2L, bits);
    const Real z3 = zeta_real(Real(3L, bits), ctx);
    const Real pi = Real::pi(bits);
    CHECK(close(zeta_A_series(1, two, ctx).value, z3 * 2L, 40));
    CHECK(close(zeta_H_series(two, Rational(1), ctx).value, z3 * 2L, 40));
    CHECK(close(zeta_O_series(two, ctx).value, z3 * 7L / 4L, 40));
    CHECK(close(s_half_series(two, ctx).value, z3 * 7L - pi * pi * Real::ln2(bits), 40));
    CHECK(close(eta_H_series(two, ctx).value, z3 * 5L / 8L, 40));
    TailEstimate t = zeta_A_series(3, two, ctx);
    CHECK(t.tail_bound < pow10_neg(40, bits));
    CHECK(t.terms_used > 0);
}

TEST_CASE("direct series refuse slow convergence") {
    PrecisionCtx ctx(20);
    const long bits = ctx.working_bits();
    CHECK_THROWS_AS(zeta_A_series(2, lit("1.0005", bits), ctx), SlowConvergence);
    CHECK_THROWS_AS(zeta_O_series(Real(1L, bits), ctx), SlowConvergence);
    CHECK_THROWS_AS(zeta_A_series(0, lit("2", bits), ctx), DomainError);
}

TEST_CASE("integer-argument integral representation needs its integral term") {
    PrecisionCtx ctx(30);
    const long bits = ctx.working_bits();
    for (long k : {1L, 2L, 3L}) {
        for (long n : {2L, 3L}) {
            const Real N(n, bits);
            auto z = zeta_derivs(N, 1, ctx);
            Real psi = digamma(Rational(n), ctx);
            Real dropped = zeta_real(N + 1L, ctx) -
                           pow(Real(k, bits), -n) * (psi * z[0].value + z[1].value - z[0].value * log(Real(k, bits)));
            Real series = zeta_A_series(k, N, ctx).value;
            Real gap = mellin_f(N, k, 2, ctx).value;
            CHECK(close(series, dropped + gap, 28));
            CHECK(abs(series - dropped) > lit("1e-3", bits));
        }
    }
}

TEST_CASE("Euler-Boole weights") {
    auto w = detail::boole_weights(5);
    CHECK(w[0] == Rational(1, 2));
    CHECK(w[1] == Rational(-1, 4));
    CHECK(w[2].is_zero());
    CHECK(w[3] == Rational(1, 8));
    CHECK(w[5] == Rational(-1, 4));
}

TEST_CASE("alternating oracles match the quadrature path") {
    PrecisionCtx ctx(35);
    const long bits = ctx.working_bits();
    Real pi2 = Real::pi(bits) * Real::pi(bits);
    Real l2 = Real::ln2(bits);
    CHECK(close(eta_H_direct_deriv(0, 1000, ctx).value, pi2 / 12L - l2 * l2 / 2L, 35));
    CHECK(close(eta_Hminus_direct_deriv(0, 1000, ctx).value, pi2 / 12L + l2 * l2 / 2L, 35));
    for (int v = 1; v <= 4; ++v) {
        CHECK(close(eta_H_direct_deriv(v, 1000, ctx).value, eta_H_deriv(v, ctx).value, 33));
        CHECK(close(eta_Hminus_direct_deriv(v, 1500, ctx).value, eta_Hminus_deriv(v, ctx).value, 33));
    }
    CHECK(close(eta_H_direct_deriv(1, 10000, PrecisionCtx(20)).value, eta_H_deriv(1, ctx).value, 18));
    CHECK_THROWS_AS(eta_H_direct_deriv(7, 1000, ctx), DomainError);
    CHECK_THROWS_AS(eta_Hminus_direct_deriv(0, 999, ctx), DomainError);
}

TEST_CASE("limit oracle") {
    PrecisionCtx ctx(20);
    Real a = gamma_A_limit(2, 1, 300000, ctx, Exec::serial);
    Real b = gamma_A_limit(2, 1, 300000, ctx, Exec::parallel);
    CHECK(mpfr_equal_p(a.raw(), b.raw()));
    CHECK(gamma_A_limit(1, 0, 1000000, ctx).to_decimal(3) == "0.989");
    CHECK(gamma_A_limit(2, 0, 1000000, ctx).to_decimal(4) == "1.026");
    Real target = gamma_H(0, ctx).value;
    Real e4 = abs(gamma_A_limit(1, 0, 10000, ctx) - target);
    Real e5 = abs(gamma_A_limit(1, 0, 100000, ctx) - target);
    Real e6 = abs(gamma_A_limit(1, 0, 1000000, ctx) - target);
    CHECK(e5 < e4);
    CHECK(e6 < e5);
    CHECK_THROWS_AS(gamma_A_limit(1, 0, 9999, ctx), DomainError);
}

TEST_CASE("partial sums of A_n(k) and the constant C_k") {
    CHECK(partial_sum_A(3, 2) == Rational(17, 6));
    for (long k = 1; k <= 4; ++k) {
        Rational direct(0);
        for (long n = 1; n <= 40; ++n) direct += a_number(n, k);
        CHECK(partial_sum_A(40, k) == direct);
    }
    PrecisionCtx ctx(30);
    const long bits = ctx.working_bits();
    CHECK(close(partial_sum_A_real(40, 3, ctx), Real(partial_sum_A(40, 3), bits), 30));
    CHECK(close(c_k_constant(1, ctx), euler_gamma(ctx) + Real(Rational(1, 2), bits), 30));
    for (long k = 1; k <= 3; ++k) {
        Real e = e_check(100000, k, ctx);
        CHECK(abs(e) <= log(Real(100000L, bits)) * 20L);
    }
}

TEST_CASE("continuation matches the direct series") {
    PrecisionCtx ctx(30);
    const long bits = ctx.working_bits();
    for (long k = 1; k <= 3; ++k)
        for (const char* s : {"1.5", "2", "3"}) {
            Real x = lit(s, bits);
            CHECK(close(zeta_A_continued(k, x, 3, ctx).value, zeta_A_series(k, x, ctx).value, 25));
        }
}

TEST_CASE("continuation at negative even integers and other points") {
    PrecisionCtx ctx(30);
    const long bits = ctx.working_bits();
    for (long k = 1; k <= 3; ++k)
        for (long m = 1; m <= 2; ++m)
            CHECK(close(zeta_A_continued(k, Real(-2 * m, bits), 2 * static_cast<int>(m) + 2, ctx).value,
                        Real(zeta_A_neg_even(k, m), bits), 28));
    Real half = lit("0.5", bits);
    CHECK(close(zeta_A_continued(1, half, 5, ctx).value, zeta_A_continued(1, half, 10, ctx).value, 28));
    CHECK_THROWS_AS(zeta_A_continued(2, lit("1.00001", bits), 3, ctx), DomainError);
    CHECK_THROWS_AS(zeta_A_continued(2, lit("-0.99999", bits), 3, ctx), DomainError);
    CHECK_THROWS_AS(zeta_A_continued(2, Real(-3L, bits), 5, ctx), DomainError);
}

TEST_CASE("pole head at s = 1 from symmetric differences") {
    PrecisionCtx ctx(30);
    const long bits = ctx.working_bits();
    const Real h = lit("1e-3", bits);
    const Real tol = h * h * 10L;
    const Real g = euler_gamma(ctx);
    for (long k = 1; k <= 3; ++k) {
        Real up = zeta_A_continued(k, h + 1L, 3, ctx).value;
        Real down = zeta_A_continued(k, 1L - h, 3, ctx).value;
        CHECK(abs(h * h * (up + down) / 2L - Real(Rational(1, k), bits)) < tol);
        CHECK(abs((up - down) * h / 2L - g / k) < tol);
    }
}

TEST_CASE("Laurent constants at s = 0 and s = 1 - 2j from the continuation") {
    PrecisionCtx ctx(30);
    const long bits = ctx.working_bits();
    const Real h = lit("1e-3", bits);
    const Real tol = h * h * 10L;
    for (long k = 1; k <= 2; ++k) {
        Real c0 = (zeta_A_continued(k, h, 3, ctx).value + zeta_A_continued(k, -h, 3, ctx).value) / 2L;
        CHECK(abs(c0 - laurent_const_at_0(k).render(ctx)) < tol);
        for (long j = 1; j <= 2; ++j) {
            const Real p(1 - 2 * j, bits);
            const int M = static_cast<int>(2 * j + 2);
            Real c = (zeta_A_continued(k, p + h, M, ctx).value + zeta_A_continued(k, p - h, M, ctx).value) / 2L;
            CHECK(abs(c - laurent_const_at_1m2j(k, j).render(ctx)) < tol);
        }
    }
}
