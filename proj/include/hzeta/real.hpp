#pragma once

#include <mpfr.h>

#include <string>

#include "hzeta/rational.hpp"

namespace hzeta {

// MPFR-backed real with an explicit precision in bits. Arithmetic results take
// the larger precision of the operands; assignment adopts the source precision.
class Real {
public:
    Real() { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_set_nan(v_); }
    Real(long v, long bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, v, MPFR_RNDN); }
    Real(double v, long bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, v, MPFR_RNDN); }
    Real(int v, long bits) : Real(static_cast<long>(v), bits) {}
    Real(const Rational& q, long bits) { mpfr_init2(v_, bits); mpfr_set_q(v_, q.get().get_mpq_t(), MPFR_RNDN); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
    ~Real() { mpfr_clear(v_); }

    Real& operator=(const Real& o) {
        if (this != &o) {
            if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }

    static Real parse(const std::string& text, long bits);
    static Real pi(long bits);
    static Real ln2(long bits);
    static Real euler(long bits);
    // Uninitialised value of the given precision, for use with raw MPFR calls.
    static Real with_prec(long bits) { Real r; mpfr_set_prec(r.v_, bits); return r; }

    long prec() const { return mpfr_get_prec(v_); }
    Real at_prec(long bits) const { Real r = with_prec(bits); mpfr_set(r.v_, v_, MPFR_RNDN); return r; }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
    long exponent2() const { return is_zero() ? -(1L << 40) : mpfr_get_exp(v_); }
    // Floor of log10|x| as a double estimate (for digit bookkeeping).
    double log10_abs() const;

    // Correctly rounded (nearest, ties-to-even) decimal with `sig` significant
    // digits, in positional notation.
    std::string to_decimal(int sig) const;
    // Round-trippable scientific notation with `sig` significant digits.
    std::string to_sci(int sig) const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator*=(const Rational& q) { mpfr_mul_q(v_, v_, q.get().get_mpq_t(), MPFR_RNDN); return *this; }
    Real& operator+=(const Rational& q) { mpfr_add_q(v_, v_, q.get().get_mpq_t(), MPFR_RNDN); return *this; }

private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);

Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);

Real operator+(const Real& a, const Rational& b);
Real operator-(const Real& a, const Rational& b);
Real operator*(const Real& a, const Rational& b);
Real operator/(const Real& a, const Rational& b);
Real operator+(const Rational& a, const Real& b);
Real operator-(const Rational& a, const Real& b);
Real operator*(const Rational& a, const Real& b);

int cmp(const Real& a, const Real& b);
inline bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Real& a, const Real& b) { return cmp(a, b) != 0; }
int cmp(const Real& a, long b);
inline bool operator<(const Real& a, long b) { return cmp(a, b) < 0; }
inline bool operator>(const Real& a, long b) { return cmp(a, b) > 0; }
inline bool operator<=(const Real& a, long b) { return cmp(a, b) <= 0; }
inline bool operator>=(const Real& a, long b) { return cmp(a, b) >= 0; }

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real asinh(const Real& x);
Real gamma_fn(const Real& x);
Real ldexp(const Real& x, long e);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);

// 10^-digits at the given precision.
Real pow10_neg(long digits, long bits);

}  // namespace hzeta
