#pragma once

#include <vector>

#include "hzeta/real.hpp"

namespace hzeta {

// Truncated power series sum_{n=0}^{M} c_n z^n.
class PowerSeries {
public:
    PowerSeries(int order, long bits);
    explicit PowerSeries(std::vector<Real> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    long bits() const { return bits_; }
    Real& operator[](int n) { return c_[static_cast<size_t>(n)]; }
    const Real& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
    const std::vector<Real>& coeffs() const { return c_; }

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    PowerSeries& operator*=(const Real& s);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(PowerSeries a, const Real& s) { return a *= s; }

    // exp of the series; the constant term may be non-zero.
    PowerSeries exp() const;
    // 1/f; requires a non-zero constant term.
    PowerSeries reciprocal() const;
    PowerSeries pow(int n) const;

    // log(z0 + t) and (z0 + t)^(-p) expanded in t.
    static PowerSeries log_shift(const Real& z0, int order);
    static PowerSeries inv_power_shift(const Real& z0, int p, int order);

private:
    std::vector<Real> c_;
    long bits_;
};

}  // namespace hzeta
