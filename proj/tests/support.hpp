#pragma once

#include <doctest.h>

#include <string>

#include "hzeta/real.hpp"

namespace doctest {
template <>
struct StringMaker<hzeta::Real> {
    static String convert(const hzeta::Real& x) { return x.to_sci(25).c_str(); }
};
}  // namespace doctest

namespace testing {

// Parse a decimal literal at the precision of `like`.
inline hzeta::Real lit(const std::string& text, long bits = 512) { return hzeta::Real::parse(text, bits); }

// |a - b| <= 10^-digits * max(1, |b|)
inline bool close(const hzeta::Real& a, const hzeta::Real& b, int digits) {
    hzeta::Real scale = hzeta::max(hzeta::Real(1L, b.prec()), hzeta::abs(b));
    return hzeta::abs(a - b) <= hzeta::pow10_neg(digits, std::max(a.prec(), b.prec())) * scale;
}

// One unit in the last printed decimal of `text`.
inline hzeta::Real last_digit_unit(const std::string& text) {
    auto dot = text.find('.');
    int decimals = dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
    return hzeta::pow10_neg(decimals, 256);
}

// Number of agreeing significant digits, capped at 1000.
inline double agree(const hzeta::Real& a, const hzeta::Real& b) {
    hzeta::Real d = hzeta::abs(a - b);
    if (d.is_zero()) return 1000;
    return b.log10_abs() - d.log10_abs();
}

}  // namespace testing
