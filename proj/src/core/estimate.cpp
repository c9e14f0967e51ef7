#include "hzeta/estimate.hpp"

namespace hzeta {

Estimate Estimate::of(const Real& v) {
    // a few units in the last place
    return {v, ldexp(abs(v), 3 - v.prec())};
}

Estimate operator+(const Estimate& a, const Estimate& b) { return {a.value + b.value, a.error + b.error}; }
Estimate operator-(const Estimate& a, const Estimate& b) { return {a.value - b.value, a.error + b.error}; }
Estimate operator-(const Estimate& a) { return {-a.value, a.error}; }

Estimate operator*(const Estimate& a, const Estimate& b) {
    return {a.value * b.value, abs(a.value) * b.error + abs(b.value) * a.error + a.error * b.error};
}

Estimate operator/(const Estimate& a, const Estimate& b) {
    Real q = a.value / b.value;
    Real denom = abs(b.value) - b.error;
    return {q, (a.error + abs(q) * b.error) / denom};
}

Estimate operator*(const Estimate& a, const Real& exact) { return {a.value * exact, a.error * abs(exact)}; }
Estimate operator*(const Real& exact, const Estimate& a) { return a * exact; }
Estimate operator*(const Estimate& a, const Rational& q) { return {a.value * q, a.error * abs(q)}; }
Estimate operator*(const Rational& q, const Estimate& a) { return a * q; }
Estimate operator*(const Estimate& a, long n) { return {a.value * n, a.error * (n < 0 ? -n : n)}; }

}  // namespace hzeta
