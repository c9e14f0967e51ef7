#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hzeta/precision.hpp"
#include "hzeta/rational.hpp"
#include "hzeta/real.hpp"

namespace hzeta {

struct Atom {
    enum class Kind { euler_gamma, pi, log, zeta, zeta_deriv };
    Kind kind;
    long arg = 0;  // base of log, argument of zeta / zeta'

    auto operator<=>(const Atom&) const = default;
};

// Rational-linear combination of monomials in the atoms gamma, pi, log b,
// zeta(n), zeta'(n).
class ExactValue {
public:
    using Monomial = std::vector<std::pair<Atom, int>>;  // sorted by atom, positive powers

    ExactValue() = default;
    ExactValue(const Rational& q);  // NOLINT(google-explicit-constructor)
    ExactValue(long n) : ExactValue(Rational(n)) {}  // NOLINT(google-explicit-constructor)

    static ExactValue atom(Atom a, int power = 1);
    static ExactValue euler_gamma() { return atom({Atom::Kind::euler_gamma}); }
    static ExactValue pi(int power = 1) { return atom({Atom::Kind::pi}, power); }
    static ExactValue log(long base) { return atom({Atom::Kind::log, base}); }
    static ExactValue zeta(long n) { return atom({Atom::Kind::zeta, n}); }
    static ExactValue zeta_deriv(long n) { return atom({Atom::Kind::zeta_deriv, n}); }

    bool is_rational() const;
    Rational rational_part() const;
    Rational gamma_coeff() const;
    Rational coeff(const Monomial& m) const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Real render(const PrecisionCtx& ctx) const;
    std::string str() const;

    ExactValue& operator+=(const ExactValue& o);
    ExactValue& operator-=(const ExactValue& o);
    ExactValue& operator*=(const ExactValue& o);
    bool operator==(const ExactValue& o) const { return terms_ == o.terms_; }

private:
    std::map<Monomial, Rational> terms_;  // no zero coefficients
};

ExactValue operator+(ExactValue a, const ExactValue& b);
ExactValue operator-(ExactValue a, const ExactValue& b);
ExactValue operator-(const ExactValue& a);
ExactValue operator*(ExactValue a, const ExactValue& b);

// zeta(1 - 2j) = -B_{2j}/(2j).
Rational zeta_neg_odd(long j);

// zeta_A(k)(-2m) = (k^{2m-1}/2 - 1/(4m)) B_{2m}.
Rational zeta_A_neg_even(long k, long m);

struct ResidueTable {
    std::map<long, ExactValue> simple;  // pole location -> residue
    ExactValue head2_at_1;              // coefficient of (s-1)^-2
    ExactValue head1_at_1;              // coefficient of (s-1)^-1
};

// Residues of zeta_A(k) at s = 0 and s = 1 - 2j for j = 1..jmax, and its head at s = 1.
ResidueTable residues_zeta_A(long k, long jmax = 10);

// Constant terms of zeta_A(k) at s = 0 and s = 1 - 2j.
ExactValue laurent_const_at_0(long k);
ExactValue laurent_const_at_1m2j(long k, long j);

// S(s) = sum_n H_n (n + 1/2)^-s continued: m = 0 gives S(0), m >= 1 gives S(-2m).
Rational s_half_special(long m);
// zeta_O(-2m), m >= 0.
Rational zeta_O_special(long m);
// Residues of S and zeta_O at s = 1 - 2m, m >= 1.
std::pair<ExactValue, ExactValue> residues_S_and_O(long m);

// Closed forms at positive integers used as anchors.
std::vector<std::pair<std::string, ExactValue>> known_positive_values();

}  // namespace hzeta
