#pragma once

#include "hzeta/real.hpp"

namespace hzeta {

struct PrecisionCtx {
    int target_digits = 30;
    int guard_digits = 10;

    PrecisionCtx() = default;
    PrecisionCtx(int target, int guard = 10);

    int working_digits() const { return target_digits + guard_digits; }
    long working_bits() const;
    // Same target with `extra` more guard digits.
    PrecisionCtx with_extra(int extra) const { return PrecisionCtx(target_digits, guard_digits + extra); }

    Real zero() const { return Real(0L, working_bits()); }
    Real one() const { return Real(1L, working_bits()); }
    Real from(const Rational& q) const { return Real(q, working_bits()); }
    // 10^-(target+guard): relative tolerance for internal truncations.
    Real eps() const { return pow10_neg(working_digits(), working_bits()); }
};

long bits_for_digits(int digits);

}  // namespace hzeta
