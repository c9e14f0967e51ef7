#pragma once

#include <utility>

#include "hzeta/rational.hpp"
#include "hzeta/real.hpp"

namespace hzeta {

// A value with an absolute error bound. Arithmetic accumulates bounds by the
// triangle inequality (first order plus the product of errors).
struct Estimate {
    Real value;
    Real error;

    Estimate() = default;
    Estimate(Real v, Real e) : value(std::move(v)), error(std::move(e)) {}
    // Value known to its last few bits.
    static Estimate of(const Real& v);
    static Estimate exact(const Real& v) { return {v, Real(0L, v.prec())}; }

    Estimate& operator+=(const Estimate& o) { value += o.value; error += o.error; return *this; }
    Estimate& operator-=(const Estimate& o) { value -= o.value; error += o.error; return *this; }
};

Estimate operator+(const Estimate& a, const Estimate& b);
Estimate operator-(const Estimate& a, const Estimate& b);
Estimate operator-(const Estimate& a);
Estimate operator*(const Estimate& a, const Estimate& b);
Estimate operator/(const Estimate& a, const Estimate& b);
Estimate operator*(const Estimate& a, const Real& exact);
Estimate operator*(const Real& exact, const Estimate& a);
Estimate operator*(const Estimate& a, const Rational& q);
Estimate operator*(const Rational& q, const Estimate& a);
Estimate operator*(const Estimate& a, long n);

}  // namespace hzeta
