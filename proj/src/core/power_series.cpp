#include "hzeta/power_series.hpp"

#include <algorithm>

#include "hzeta/error.hpp"

namespace hzeta {

PowerSeries::PowerSeries(int order, long bits) : c_(static_cast<size_t>(order) + 1, Real(0L, bits)), bits_(bits) {
    if (order < 0) throw DomainError("power series order must be non-negative");
}

PowerSeries::PowerSeries(std::vector<Real> coeffs) : c_(std::move(coeffs)), bits_(0) {
    if (c_.empty()) throw DomainError("empty power series");
    for (const auto& x : c_) bits_ = std::max(bits_, x.prec());
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    int m = std::min(order(), o.order());
    c_.resize(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) (*this)[i] += o[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    int m = std::min(order(), o.order());
    c_.resize(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) (*this)[i] -= o[i];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Real& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int m = std::min(a.order(), b.order());
    PowerSeries r(m, std::max(a.bits(), b.bits()));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) r[i + j] += a[i] * b[j];
    return r;
}

PowerSeries PowerSeries::exp() const {
    // b = exp(a): b' = a' b, so n b_n = sum_{j=1}^n j a_j b_{n-j}
    int m = order();
    PowerSeries b(m, bits_);
    b[0] = hzeta::exp(c_[0]);
    for (int n = 1; n <= m; ++n) {
        Real s(0L, bits_);
        for (int j = 1; j <= n; ++j) s += (*this)[j] * b[n - j] * static_cast<long>(j);
        b[n] = s / static_cast<long>(n);
    }
    return b;
}

PowerSeries PowerSeries::reciprocal() const {
    if (c_[0].is_zero()) throw DomainError("reciprocal of series with zero constant term");
    int m = order();
    PowerSeries r(m, bits_);
    r[0] = 1L / c_[0];
    for (int n = 1; n <= m; ++n) {
        Real s(0L, bits_);
        for (int j = 1; j <= n; ++j) s += (*this)[j] * r[n - j];
        r[n] = -(s * r[0]);
    }
    return r;
}

PowerSeries PowerSeries::pow(int n) const {
    if (n < 0) return reciprocal().pow(-n);
    PowerSeries result(order(), bits_);
    result[0] = Real(1L, bits_);
    PowerSeries base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

PowerSeries PowerSeries::log_shift(const Real& z0, int order) {
    PowerSeries r(order, z0.prec());
    r[0] = log(z0);
    Real inv = 1L / z0;
    Real p = inv;  // z0^-i
    for (int i = 1; i <= order; ++i) {
        r[i] = p / static_cast<long>(i);
        if (i % 2 == 0) r[i] = -r[i];
        p *= inv;
    }
    return r;
}

PowerSeries PowerSeries::inv_power_shift(const Real& z0, int p, int order) {
    // (z0+t)^-p = z0^-p sum_i C(-p,i) (t/z0)^i
    PowerSeries r(order, z0.prec());
    Real inv = 1L / z0;
    Real term = hzeta::pow(inv, static_cast<long>(p));
    for (int i = 0; i <= order; ++i) {
        r[i] = term;
        term *= inv;
        term *= static_cast<long>(-(p + i));
        term /= static_cast<long>(i + 1);
    }
    return r;
}

}  // namespace hzeta
