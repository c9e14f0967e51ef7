#include "hzeta/real.hpp"

#include <algorithm>
#include <cmath>

#include "hzeta/error.hpp"

namespace hzeta {

namespace {

long maxp(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Real apply(Unary fn, const Real& x) {
    Real r = Real::with_prec(x.prec());
    fn(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

Real Real::parse(const std::string& text, long bits) {
    Real r = with_prec(bits);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) throw DomainError("cannot parse real '" + text + "'");
    return r;
}

Real Real::pi(long bits) { Real r = with_prec(bits); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
Real Real::ln2(long bits) { Real r = with_prec(bits); mpfr_const_log2(r.v_, MPFR_RNDN); return r; }
Real Real::euler(long bits) { Real r = with_prec(bits); mpfr_const_euler(r.v_, MPFR_RNDN); return r; }

double Real::log10_abs() const {
    if (is_zero()) return -1e300;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0);
}

std::string Real::to_decimal(int sig) const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
    if (is_zero()) return "0";
    mpfr_exp_t e10 = 0;
    char* s = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    bool neg = false;
    if (!digits.empty() && digits[0] == '-') { neg = true; digits.erase(0, 1); }
    // value = 0.d1d2... * 10^e10
    std::string out;
    if (e10 <= 0) {
        out = "0." + std::string(static_cast<size_t>(-e10), '0') + digits;
    } else if (static_cast<size_t>(e10) >= digits.size()) {
        out = digits + std::string(static_cast<size_t>(e10) - digits.size(), '0');
    } else {
        out = digits.substr(0, static_cast<size_t>(e10)) + "." + digits.substr(static_cast<size_t>(e10));
    }
    return neg ? "-" + out : out;
}

std::string Real::to_sci(int sig) const {
    if (!is_finite()) return to_decimal(sig);
    if (is_zero()) return "0";
    mpfr_exp_t e10 = 0;
    char* s = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    std::string sgn;
    if (digits[0] == '-') { sgn = "-"; digits.erase(0, 1); }
    std::string mant = digits.substr(0, 1);
    if (digits.size() > 1) mant += "." + digits.substr(1);
    return sgn + mant + "e" + std::to_string(static_cast<long>(e10) - 1);
}

Real& Real::operator+=(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real operator+(const Real& a, const Real& b) { Real r = Real::with_prec(maxp(a, b)); mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
Real operator-(const Real& a, const Real& b) { Real r = Real::with_prec(maxp(a, b)); mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
Real operator*(const Real& a, const Real& b) { Real r = Real::with_prec(maxp(a, b)); mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
Real operator/(const Real& a, const Real& b) { Real r = Real::with_prec(maxp(a, b)); mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN); return r; }
Real operator-(const Real& a) { Real r = Real::with_prec(a.prec()); mpfr_neg(r.raw(), a.raw(), MPFR_RNDN); return r; }

Real operator+(const Real& a, long b) { Real r = Real::with_prec(a.prec()); mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator-(const Real& a, long b) { Real r = Real::with_prec(a.prec()); mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator*(const Real& a, long b) { Real r = Real::with_prec(a.prec()); mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator/(const Real& a, long b) { Real r = Real::with_prec(a.prec()); mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) { Real r = Real::with_prec(b.prec()); mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN); return r; }
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) { Real r = Real::with_prec(b.prec()); mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN); return r; }

Real operator+(const Real& a, const Rational& b) { Real r = Real::with_prec(a.prec()); mpfr_add_q(r.raw(), a.raw(), b.get().get_mpq_t(), MPFR_RNDN); return r; }
Real operator-(const Real& a, const Rational& b) { Real r = Real::with_prec(a.prec()); mpfr_sub_q(r.raw(), a.raw(), b.get().get_mpq_t(), MPFR_RNDN); return r; }
Real operator*(const Real& a, const Rational& b) { Real r = Real::with_prec(a.prec()); mpfr_mul_q(r.raw(), a.raw(), b.get().get_mpq_t(), MPFR_RNDN); return r; }
Real operator/(const Real& a, const Rational& b) { Real r = Real::with_prec(a.prec()); mpfr_div_q(r.raw(), a.raw(), b.get().get_mpq_t(), MPFR_RNDN); return r; }
Real operator+(const Rational& a, const Real& b) { return b + a; }
Real operator-(const Rational& a, const Real& b) { return -(b - a); }
Real operator*(const Rational& a, const Real& b) { return b * a; }

int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }
int cmp(const Real& a, long b) { return mpfr_cmp_si(a.raw(), b); }

Real abs(const Real& x) { return apply(mpfr_abs, x); }
Real sqrt(const Real& x) { return apply(mpfr_sqrt, x); }
Real exp(const Real& x) { return apply(mpfr_exp, x); }
Real expm1(const Real& x) { return apply(mpfr_expm1, x); }
Real log(const Real& x) { return apply(mpfr_log, x); }
Real log1p(const Real& x) { return apply(mpfr_log1p, x); }
Real sin(const Real& x) { return apply(mpfr_sin, x); }
Real cos(const Real& x) { return apply(mpfr_cos, x); }
Real sinh(const Real& x) { return apply(mpfr_sinh, x); }
Real cosh(const Real& x) { return apply(mpfr_cosh, x); }
Real asinh(const Real& x) { return apply(mpfr_asinh, x); }
Real gamma_fn(const Real& x) { return apply(mpfr_gamma, x); }
Real floor(const Real& x) { Real r = Real::with_prec(x.prec()); mpfr_floor(r.raw(), x.raw()); return r; }

Real pow(const Real& x, const Real& y) { Real r = Real::with_prec(maxp(x, y)); mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN); return r; }
Real pow(const Real& x, long n) { Real r = Real::with_prec(x.prec()); mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN); return r; }
Real ldexp(const Real& x, long e) { Real r = Real::with_prec(x.prec()); mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN); return r; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pow10_neg(long digits, long bits) {
    Real r = Real::with_prec(bits);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(digits), MPFR_RNDN);
    mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

}  // namespace hzeta
