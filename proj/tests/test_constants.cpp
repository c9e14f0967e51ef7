#include <doctest.h>

#include "hzeta/combinatorics.hpp"
#include "hzeta/constants.hpp"
#include "hzeta/error.hpp"
#include "hzeta/euler_maclaurin.hpp"
#include "support.hpp"

using namespace hzeta;
using testing::close;
using testing::lit;

TEST_CASE("Euler's constant and gamma(0)") {
    PrecisionCtx ctx(50);
    Real g = euler_gamma(ctx);
    CHECK(g.to_decimal(10) == "0.5772156649");
    CHECK(close(stieltjes(0, ctx), g, 50));
    CHECK(close(-digamma(Rational(1), ctx), g, 50));
}

TEST_CASE("Stieltjes constants against reference values") {
    PrecisionCtx ctx(40);
    auto v = stieltjes_all(30, Rational(1), ctx);
    CHECK(close(v[1].value, lit("-0.0728158454836767248605863758749013191377363383"), 40));
    CHECK(close(v[2].value, lit("-0.0096903631928723184845303860352125293590658061"), 40));
    CHECK(close(v[3].value, lit("0.00205383442030334586616004654275338428571580445"), 40));
    CHECK(close(v[10].value, lit("0.000205332814909064794683722289237065302959853774"), 40));
    CHECK(close(v[20].value, lit("0.000466343561511559449400594824433550525113143474"), 40));
    CHECK(close(v[30].value, lit("0.00355772885557316094791353774890840261080965065"), 40));
    for (const auto& e : v) CHECK(e.error < pow10_neg(40, 256));
    CHECK(close(stieltjes_gen(1, Rational(1, 3), ctx), lit("-3.2595575159179101952508745826765592579764722"), 40));
}

TEST_CASE("Stieltjes constants at two cutoffs agree") {
    const long bits = 300;
    auto a = detail::stieltjes_with_cutoff(12, Rational(1), 60, bits);
    auto b = detail::stieltjes_with_cutoff(12, Rational(1), 97, bits);
    for (int m = 0; m <= 12; ++m) CHECK(close(a[static_cast<size_t>(m)].value, b[static_cast<size_t>(m)].value, 70));
}

TEST_CASE("gamma(0, a) is -psi(a)") {
    PrecisionCtx ctx(40);
    const long bits = ctx.working_bits();
    for (Rational a : {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(5, 4)})
        CHECK(close(stieltjes_gen(0, a, ctx), -digamma(a, ctx), 40));
    Real half = -2L * Real::ln2(bits) - Real::euler(bits);
    CHECK(close(digamma(Rational(1, 2), ctx), half, 45));
    CHECK(close(stieltjes_gen(3, Rational(1), ctx), stieltjes(3, ctx), 45));
}

TEST_CASE("digamma") {
    PrecisionCtx ctx(40);
    const long bits = ctx.working_bits();
    CHECK(close(digamma(Rational(2), ctx), 1L - Real::euler(bits), 45));
    CHECK(close(digamma(Rational(1, 3), ctx), lit("-3.1320337800208063229964190742872688541554283"), 40));
    CHECK(close(digamma_real(Real(-2.5, bits), ctx), lit("1.10315664064524318722569033366791109947350706"), 40));
    CHECK_THROWS_AS(digamma_real(Real(-3L, bits), ctx), PoleError);
    CHECK_THROWS_AS(digamma(Rational(0), ctx), PoleError);
}

TEST_CASE("zeta on the real line") {
    PrecisionCtx ctx(40);
    const long bits = ctx.working_bits();
    Real pi = Real::pi(bits);
    CHECK(close(zeta_real(Real(2L, bits), ctx), pi * pi / 6L, 45));
    CHECK(close(zeta_real(Real(-1L, bits), ctx), Real(Rational(-1, 12), bits), 45));
    CHECK(close(zeta_real(Real(0L, bits), ctx), Real(Rational(-1, 2), bits), 45));
    CHECK(close(zeta_real(Real(-3.5, bits), ctx), lit("0.00444101133547943195853465801781977508621424544"), 42));
    CHECK(close(zeta_real(Real(0.5, bits), ctx), lit("-1.46035450880958681288949915251529801246722933"), 42));
    for (long m = 1; m <= 3; ++m) CHECK(abs(zeta_real(Real(-2 * m, bits), ctx)) < pow10_neg(45, bits));
    CHECK_THROWS_AS(zeta_real(Real(1L, bits), ctx), PoleError);
    // independent: MPFR's own zeta
    for (double s : {1.5, 2.5, 3.0, 7.25, -0.75}) {
        Real x(s, bits);
        Real ref = Real::with_prec(bits);
        mpfr_zeta(ref.raw(), x.raw(), MPFR_RNDN);
        CHECK(close(zeta_real(x, ctx), ref, 42));
    }
}

TEST_CASE("zeta derivatives") {
    PrecisionCtx ctx(40);
    const long bits = ctx.working_bits();
    CHECK(close(zeta_deriv_at_2(1, ctx), lit("-0.937548254315843753702574094567864977897860289"), 42));
    CHECK(close(zeta_deriv_at_2(2, ctx), lit("1.98928023429890102342085868742151638149446077"), 42));
    CHECK(close(zeta_deriv_at_2(5, ctx), lit("-120.000824333271816769072946443318935922016534"), 42));
    CHECK(close(zeta_deriv_real(Real(-2.5, bits), 1, ctx), lit("-0.00626573637218975840328275872972583317632237075"), 42));
    CHECK(close(zeta_deriv_at_2(2, ctx), zeta_deriv_real(Real(2L, bits), 2, ctx), 45));
    // two direct-sum cutoffs
    auto a = detail::zeta_derivs_with_cutoff(Real(2L, 300), 6, 50, 300);
    auto b = detail::zeta_derivs_with_cutoff(Real(2L, 300), 6, 83, 300);
    for (int r = 0; r <= 6; ++r) CHECK(close(a[static_cast<size_t>(r)].value, b[static_cast<size_t>(r)].value, 70));
}

TEST_CASE("zeta with different Euler-Maclaurin cutoffs") {
    for (double s : {-3.5, -0.5, 0.5, 2.0, 3.0}) {
        auto a = detail::zeta_derivs_with_cutoff(Real(s, 400), 0, 60, 400);
        auto b = detail::zeta_derivs_with_cutoff(Real(s, 400), 0, 90, 400);
        CHECK(close(a[0].value, b[0].value, 70));
    }
}

TEST_CASE("polygamma at 1") {
    PrecisionCtx ctx(40);
    const long bits = ctx.working_bits();
    Real pi = Real::pi(bits);
    CHECK(close(polygamma_at_1(0, ctx), -Real::euler(bits), 45));
    CHECK(close(polygamma_at_1(1, ctx), pi * pi / 6L, 45));
    CHECK(close(polygamma_at_1(2, ctx), -2L * zeta_real(Real(3L, bits), ctx), 45));
    // finite differences of digamma at 1
    PrecisionCtx hi(80);
    const long hb = hi.working_bits();
    Real h = pow10_neg(12, hb);
    auto psi = [&](long j) { return digamma_real(1L + h * j, hi); };
    Real d1 = (psi(1) - psi(-1)) / (2L * h);
    Real d2 = (psi(1) - 2L * psi(0) + psi(-1)) / (h * h);
    Real d3 = (psi(2) - 2L * psi(1) + 2L * psi(-1) - psi(-2)) / (2L * h * h * h);
    CHECK(close(d1, polygamma_at_1(1, ctx), 20));
    CHECK(close(d2, polygamma_at_1(2, ctx), 20));
    CHECK(close(d3, polygamma_at_1(3, ctx), 20));
}

TEST_CASE("Hurwitz tail derivative orders are consistent") {
    // d/dsigma Z_0 = Z_1 by central difference
    const long bits = 400;
    Real W(60L, bits);
    Real tol = pow10_neg(100, bits);
    Real s(2.5, bits);
    Real h = pow10_neg(30, bits);
    auto zp = hurwitz_tail(s + h, W, 1, tol);
    auto zm = hurwitz_tail(s - h, W, 1, tol);
    auto z0 = hurwitz_tail(s, W, 1, tol);
    Real d = (zp[0].value - zm[0].value) / (2L * h);
    CHECK(close(d, z0[1].value, 50));
}
