#include <doctest.h>

#include "hzeta/constants.hpp"
#include "hzeta/error.hpp"
#include "hzeta/integrals.hpp"
#include "hzeta/quadrature.hpp"
#include "support.hpp"

using namespace hzeta;
using testing::close;
using testing::lit;

TEST_CASE("double-exponential quadrature on exponential moments") {
    PrecisionCtx ctx(40);
    const long bits = ctx.with_extra(10).working_bits();
    QuadratureSpec spec = make_spec(ctx, 1.0, 2);
    auto r = integrate_de(log_moments([](const Real& x) { return exp(-x); }, 2), 3, spec, bits);
    Real g = euler_gamma(ctx);
    Real z2 = zeta_real(Real(2L, bits), ctx);
    CHECK(close(r[0].value, Real(1L, bits), 40));
    CHECK(close(r[1].value, -g, 40));
    CHECK(close(r[2].value, g * g + z2, 40));
    for (const auto& e : r) CHECK(e.error_bound < pow10_neg(35, bits));
}

TEST_CASE("serial and parallel quadrature are bitwise identical") {
    PrecisionCtx ctx(30);
    auto a = integral_i_all(3, 2, ctx, Exec::serial);
    auto b = integral_i_all(3, 2, ctx, Exec::parallel);
    for (size_t v = 0; v < a.size(); ++v) {
        CHECK(mpfr_equal_p(a[v].value.raw(), b[v].value.raw()));
        CHECK(a[v].levels_used == b[v].levels_used);
    }
}

TEST_CASE("kernel F series and direct forms agree at the switch radius") {
    const long bits = 400;
    for (long k : {1L, 2L, 5L, 13L}) {
        KernelF F(k, bits);
        Real r = F.switch_radius();
        Real lo = r - ldexp(Real(1L, bits), -40);
        Real direct = -log(-expm1(-lo) / lo) / expm1(lo * k);
        CHECK(close(F(lo), direct, 100));
    }
}

TEST_CASE("integrals i_{v,k} against reference values") {
    PrecisionCtx ctx(35);
    auto i1 = integral_i_all(2, 1, ctx);
    Real g = euler_gamma(ctx);
    Real closed = zeta_real(Real(2L, ctx.working_bits()), ctx) / 2L - g * g / 2L - stieltjes(1, ctx);
    CHECK(close(i1[0].value, closed, 35));
    CHECK(close(i1[0].value, lit("0.72869391700393060593760589102029180041750271881292"), 35));
    CHECK(close(i1[2].value, lit("1.1751161240986739039945549828938717712314985248548"), 35));
    auto i3 = integral_i_all(2, 3, ctx);
    CHECK(close(i3[0].value, lit("0.087709082857726130753364753900765081538519548148613"), 35));
    CHECK(close(i3[2].value, lit("0.27907268644312322330245094578006899847034584094037"), 35));
    CHECK(close(integral_i(5, 2, ctx).value, lit("-29.498645565959331401752741387997880064242714922837"), 35));
}

TEST_CASE("integrals J and K against closed forms") {
    PrecisionCtx ctx(40);
    const long bits = ctx.working_bits();
    Real pi2 = Real::pi(bits) * Real::pi(bits);
    Real l2 = Real::ln2(bits);
    auto j = integral_j_all(3, ctx);
    auto k = integral_k_alt_all(3, ctx);
    CHECK(close(j[0].value, -pi2 / 12L - l2 * l2 / 2L, 40));
    CHECK(close(k[0].value, pi2 / 12L - l2 * l2 / 2L, 40));
    CHECK(close(j[3].value, lit("12.07899284942495164693660330736189479157116468072"), 40));
    CHECK(close(k[3].value, lit("-1.8470744601527877779276615050676912601458462405184"), 40));
}

TEST_CASE("integrals are stable across precisions") {
    auto a = integral_i_all(4, 3, PrecisionCtx(30));
    auto b = integral_i_all(4, 3, PrecisionCtx(60));
    for (size_t v = 0; v < a.size(); ++v) CHECK(close(a[v].value, b[v].value, 30));
}

TEST_CASE("mellin_f special values") {
    PrecisionCtx ctx(30);
    const long bits = ctx.working_bits();
    for (long k : {1L, 2L, 5L}) {
        Estimate e = mellin_f(Real(0L, bits), k, 3, ctx);
        CHECK(close(e.value, Real(Rational(1, 2 * k), bits), 30));
    }
    CHECK(close(mellin_f(Real(-1L, bits), 1, 3, ctx).value, Real(Rational(7, 24), bits), 30));
    CHECK(close(mellin_f(Real(2L, bits), 1, 2, ctx).value, lit("0.9599610045769954436240151313579052684460699554588"), 30));
    CHECK(close(mellin_f(lit("2.5", bits), 2, 2, ctx).value, lit("0.10821321503207572260677363091539284651945005493074"), 30));
    CHECK(close(mellin_f(lit("0.5", bits), 3, 2, ctx).value, lit("0.12301517817567437715668268569125543015143294146642"), 30));
}

TEST_CASE("mellin_f does not depend on the subtraction order") {
    PrecisionCtx ctx(30);
    const long bits = ctx.working_bits();
    for (const char* s : {"-1.5", "-0.25", "0.75", "3.5"}) {
        Real x = lit(s, bits);
        CHECK(close(mellin_f(x, 2, 2, ctx).value, mellin_f(x, 2, 6, ctx).value, 28));
    }
    CHECK_THROWS_AS(mellin_f(lit("-3.5", bits), 2, 2, ctx), DomainError);
}

TEST_CASE("mellin_f is continuous at positive integers") {
    PrecisionCtx ctx(25);
    const long bits = ctx.working_bits();
    for (long n : {1L, 2L, 3L}) {
        Real at = mellin_f(Real(n, bits), 2, 2, ctx).value;
        for (const char* h : {"1e-6", "-1e-6"}) {
            Real near = mellin_f(Real(n, bits) + lit(h, bits), 2, 2, ctx).value;
            CHECK(abs(near - at) < lit("1e-5", bits));
        }
    }
}
