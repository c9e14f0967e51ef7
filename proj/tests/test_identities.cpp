#include <doctest.h>

#include "hzeta/error.hpp"
#include "hzeta/identities.hpp"
#include "support.hpp"

using namespace hzeta;
using testing::lit;

TEST_CASE("agreement digits") {
    const long bits = 256;
    CHECK(agreement_digits(lit("1.0001", bits), lit("1", bits), 50) == 4);
    CHECK(agreement_digits(lit("1", bits), lit("1", bits), 50) == 50);
    CHECK(agreement_digits(lit("100.01", bits), lit("100", bits), 50) == 4);
    CHECK(agreement_digits(lit("0.0013", bits), lit("0.0012", bits), 50) == 4);
}

TEST_CASE("single identity checks") {
    PrecisionCtx ctx(30);
    const long bits = ctx.working_bits();
    const Real two(2L, bits);
    for (long k = 1; k <= 3; ++k) CHECK(check_raabe(k, two, ctx).pass);
    CHECK(check_half_shift(Real(3L, bits), ctx).pass);
    CHECK(check_s_half_split(lit("2.5", bits), ctx).pass);
    CHECK(check_odd_zeta(two, ctx).pass);
    for (char v : {'a', 'b', 'c'}) CHECK(check_integer_relations(2, v, ctx).pass);
    CHECK(check_integral_repr_integer(3, 4, ctx).pass);
    CHECK_THROWS_AS(check_integer_relations(1, 'a', ctx), DomainError);
    CHECK_THROWS_AS(check_integer_relations(2, 'd', ctx), DomainError);
    IdentityReport r = check_half_shift(two, ctx, 25);
    CHECK(r.points.size() == 1);
    CHECK(r.points[0].digits_agreement >= 25);
}

TEST_CASE("sum identities at N = 30") {
    PrecisionCtx ctx(20);
    auto reports = check_sum_identities(30, ctx);
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) CHECK_MESSAGE(r.pass, r.identity_id);
}

TEST_CASE("merge keeps order and combines points") {
    PrecisionCtx ctx(20);
    const long bits = ctx.working_bits();
    std::vector<IdentityReport> parts = {check_odd_zeta(Real(2L, bits), ctx), check_half_shift(Real(2L, bits), ctx),
                                         check_odd_zeta(Real(3L, bits), ctx)};
    auto merged = merge_reports(parts);
    REQUIRE(merged.size() == 2);
    CHECK(merged[0].identity_id == "odd_zeta");
    CHECK(merged[0].points.size() == 2);
}

TEST_CASE("identity suite passes and is deterministic") {
    PrecisionCtx ctx(30);
    auto par = identity_suite(ctx, Exec::parallel);
    auto ser = identity_suite(ctx, Exec::serial);
    REQUIRE(par.size() == ser.size());
    for (size_t i = 0; i < par.size(); ++i) {
        CHECK_MESSAGE(par[i].pass, par[i].identity_id);
        CHECK(par[i].identity_id == ser[i].identity_id);
        REQUIRE(par[i].points.size() == ser[i].points.size());
        for (size_t j = 0; j < par[i].points.size(); ++j)
            CHECK(mpfr_equal_p(par[i].points[j].lhs.raw(), ser[i].points[j].lhs.raw()));
    }
}

TEST_CASE("oracle suite passes") {
    PrecisionCtx ctx(30);
    for (const auto& r : oracle_suite(ctx)) CHECK_MESSAGE(r.pass, r.identity_id);
}
