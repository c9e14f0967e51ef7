#pragma once

#include <gmpxx.h>

#include "hzeta/rational.hpp"

namespace hzeta {

mpz_class binomial(long n, long k);
mpz_class factorial(long n);

// B_n with B_1 = -1/2. Memoized; safe to call concurrently.
Rational bernoulli_number(long n);
// B_n(x) = sum_j C(n,j) B_j x^(n-j).
Rational bernoulli_poly(long n, const Rational& x);

// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
Rational harmonic(long n);
// H_n(a) = sum_{k=0}^n 1/(k+a); a must not be a non-positive integer.
Rational harmonic_shifted(long n, const Rational& a);
// H_n^- = sum_{k=1}^n (-1)^(k-1)/k.
Rational harmonic_skew(long n);
// O_n = sum_{k=1}^n 1/(2k-1).
Rational harmonic_odd(long n);

// A_n(k) = sum of 1/v over 1 <= v <= n with v = n (mod k).
Rational a_number(long n, long k);
// Taylor coefficient D_{n,k} of (z e^{kz}/(e^{kz}-1)) log((e^z-1)/z). Memoized.
Rational d_coeff(long n, long k);

}  // namespace hzeta
