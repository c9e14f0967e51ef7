#include <doctest.h>

#include "hzeta/constants.hpp"
#include "hzeta/error.hpp"
#include "hzeta/special_values.hpp"
#include "support.hpp"

using namespace hzeta;
using testing::close;
using testing::lit;

TEST_CASE("zeta_A at negative even integers") {
    CHECK(zeta_A_neg_even(2, 1) == Rational(1, 8));
    CHECK(zeta_A_neg_even(1, 1) == Rational(1, 24));
    CHECK(zeta_A_neg_even(1, 2) == Rational(-1, 80));
    for (long k = 1; k <= 5; ++k)
        for (long m = 1; m <= 10; ++m) CHECK_FALSE(zeta_A_neg_even(k, m).is_zero());
    CHECK_THROWS_AS(zeta_A_neg_even(0, 1), DomainError);
    CHECK_THROWS_AS(zeta_A_neg_even(1, 0), DomainError);
}

TEST_CASE("residues of zeta_A") {
    ResidueTable r1 = residues_zeta_A(1);
    CHECK(r1.simple.at(0) == ExactValue(Rational(1, 2)));
    CHECK(r1.simple.at(-1) == ExactValue(Rational(-1, 12)));
    ResidueTable r3 = residues_zeta_A(3, 3);
    CHECK(r3.simple.at(-3) == ExactValue(Rational(9, 40)));
    CHECK(r3.simple.at(0) == ExactValue(Rational(1, 2)));
    CHECK(r3.simple.size() == 4);
    CHECK(r3.head2_at_1 == ExactValue(Rational(1, 3)));
    CHECK(r3.head1_at_1.gamma_coeff() == Rational(1, 3));
    CHECK(r3.head1_at_1.rational_part().is_zero());
}

TEST_CASE("Laurent constants at s = 0 and s = 1 - 2j") {
    for (long k = 1; k <= 4; ++k) {
        ExactValue c = laurent_const_at_0(k);
        CHECK(c.rational_part() == Rational(1, 2 * k));
        CHECK(c.gamma_coeff() == Rational(1, 2));
    }
    PrecisionCtx ctx(30);
    Real g = euler_gamma(ctx);
    CHECK(close(laurent_const_at_0(1).render(ctx), (g + 1L) / 2L, 30));
    CHECK(laurent_const_at_0(1).render(ctx).to_decimal(6) == "0.788608");

    ExactValue a = laurent_const_at_1m2j(1, 1);
    CHECK(a.rational_part() == Rational(1, 24) - Rational(1, 4) + Rational(1, 12));
    CHECK(a.gamma_coeff() == Rational(-1, 12));
    ExactValue b = laurent_const_at_1m2j(2, 1);
    CHECK(b.rational_part() == Rational(1, 48) - Rational(1, 4) + Rational(2, 12));
    CHECK(b.gamma_coeff() == Rational(-2, 12));
    ExactValue c = laurent_const_at_1m2j(1, 2);
    CHECK(c.rational_part() == Rational(3, 160) - Rational(11, 6) / Rational(120));
    CHECK(c.gamma_coeff() == Rational(1, 120));
    CHECK(c.terms().size() == 2);
}

TEST_CASE("special values of S and zeta_O") {
    CHECK(s_half_special(0) == Rational(1, 2));
    CHECK(s_half_special(1) == Rational(-1, 24));
    CHECK(s_half_special(2) == Rational(7, 480));
    CHECK(zeta_O_special(0).is_zero());
    CHECK(zeta_O_special(3).is_zero());
    auto [rs, ro] = residues_S_and_O(1);
    CHECK(rs == ExactValue(Rational(1, 24)));
    CHECK(ro == ExactValue(Rational(1, 48)));
    CHECK_THROWS_AS(residues_S_and_O(0), DomainError);
}

TEST_CASE("ExactValue algebra and rendering") {
    ExactValue g = ExactValue::euler_gamma();
    ExactValue x = ExactValue(Rational(1, 3)) + g * ExactValue(2L);
    CHECK((x - x).terms().empty());
    CHECK((x * x).coeff({{Atom{Atom::Kind::euler_gamma}, 2}}) == Rational(4));
    CHECK(x.str() == "1/3 + 2*gamma");
    CHECK(ExactValue(Rational(1, 8)).is_rational());
    CHECK_FALSE(x.is_rational());

    PrecisionCtx ctx(30);
    auto table = known_positive_values();
    CHECK(table.size() == 5);
    CHECK(table[1].second.render(ctx).to_decimal(9) == "2.10359958");
    CHECK(table[2].second.render(ctx).to_decimal(6) == "1.57331");
    CHECK(table[2].second.str() == "-pi^2*log(2) + 7*zeta(3)");
    ExactValue zd = ExactValue::zeta_deriv(2);
    CHECK(close(zd.render(ctx), lit("-0.937548254315843753702574094567864659818369"), 30));
}
