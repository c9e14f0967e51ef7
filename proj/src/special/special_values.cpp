#include "hzeta/special_values.hpp"

#include <sstream>

#include "hzeta/combinatorics.hpp"
#include "hzeta/constants.hpp"
#include "hzeta/error.hpp"

namespace hzeta {

namespace {

ExactValue::Monomial multiply(const ExactValue::Monomial& a, const ExactValue::Monomial& b) {
    std::map<Atom, int> acc;
    for (const auto& [atom, p] : a) acc[atom] += p;
    for (const auto& [atom, p] : b) acc[atom] += p;
    return {acc.begin(), acc.end()};
}

std::string atom_name(const Atom& a) {
    switch (a.kind) {
        case Atom::Kind::euler_gamma: return "gamma";
        case Atom::Kind::pi: return "pi";
        case Atom::Kind::log: return "log(" + std::to_string(a.arg) + ")";
        case Atom::Kind::zeta: return "zeta(" + std::to_string(a.arg) + ")";
        case Atom::Kind::zeta_deriv: return "zeta'(" + std::to_string(a.arg) + ")";
    }
    return "?";
}

Real atom_value(const Atom& a, const PrecisionCtx& ctx) {
    const long bits = ctx.working_bits();
    switch (a.kind) {
        case Atom::Kind::euler_gamma: return euler_gamma(ctx);
        case Atom::Kind::pi: return Real::pi(bits);
        case Atom::Kind::log: return log(Real(a.arg, bits));
        case Atom::Kind::zeta: return zeta_real(Real(a.arg, bits), ctx);
        case Atom::Kind::zeta_deriv: return zeta_deriv_real(Real(a.arg, bits), 1, ctx);
    }
    throw DomainError("unknown atom");
}

Rational pow_long(long base, long e) { return pow(Rational(base), e); }

}  // namespace

ExactValue::ExactValue(const Rational& q) {
    if (!q.is_zero()) terms_[{}] = q;
}

ExactValue ExactValue::atom(Atom a, int power) {
    if (power < 1) throw DomainError("atom powers must be positive");
    ExactValue v;
    v.terms_[{{a, power}}] = Rational(1);
    return v;
}

bool ExactValue::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational ExactValue::rational_part() const { return coeff({}); }

Rational ExactValue::gamma_coeff() const { return coeff({{Atom{Atom::Kind::euler_gamma}, 1}}); }

Rational ExactValue::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Real ExactValue::render(const PrecisionCtx& ctx) const {
    const PrecisionCtx inner = ctx.with_extra(5);
    const long bits = inner.working_bits();
    std::map<Atom, Real> cache;
    Real sum(0L, bits);
    for (const auto& [mono, q] : terms_) {
        Real t(q, bits);
        for (const auto& [atom, p] : mono) {
            auto it = cache.find(atom);
            if (it == cache.end()) it = cache.emplace(atom, atom_value(atom, inner)).first;
            t *= pow(it->second, static_cast<long>(p));
        }
        sum += t;
    }
    return sum.at_prec(ctx.working_bits());
}

std::string ExactValue::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, q] : terms_) {
        Rational c = q;
        if (!first) {
            out << (c.sign() < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        std::string factors;
        for (const auto& [atom, p] : mono) {
            if (!factors.empty()) factors += "*";
            factors += atom_name(atom);
            if (p > 1) factors += "^" + std::to_string(p);
        }
        if (factors.empty()) {
            out << c.str();
        } else if (c == Rational(1)) {
            out << factors;
        } else if (c == Rational(-1)) {
            out << "-" << factors;
        } else {
            out << c.str() << "*" << factors;
        }
    }
    return out.str();
}

ExactValue& ExactValue::operator+=(const ExactValue& o) {
    for (const auto& [mono, q] : o.terms_) {
        Rational c = coeff(mono) + q;
        if (c.is_zero()) {
            terms_.erase(mono);
        } else {
            terms_[mono] = c;
        }
    }
    return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& o) { return *this += -o; }

ExactValue& ExactValue::operator*=(const ExactValue& o) {
    ExactValue out;
    for (const auto& [ma, qa] : terms_)
        for (const auto& [mb, qb] : o.terms_) {
            ExactValue t;
            t.terms_[multiply(ma, mb)] = qa * qb;
            out += t;
        }
    *this = std::move(out);
    return *this;
}

ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
ExactValue operator-(const ExactValue& a) { return a * ExactValue(-1L); }
ExactValue operator*(ExactValue a, const ExactValue& b) { return a *= b; }

Rational zeta_neg_odd(long j) {
    if (j < 1) throw DomainError("j must be positive");
    return -bernoulli_number(2 * j) / Rational(2 * j);
}

Rational zeta_A_neg_even(long k, long m) {
    if (k < 1 || m < 1) throw DomainError("zeta_A_neg_even needs k >= 1, m >= 1");
    return (pow_long(k, 2 * m - 1) / Rational(2) - Rational(1, 4 * m)) * bernoulli_number(2 * m);
}

ResidueTable residues_zeta_A(long k, long jmax) {
    if (k < 1) throw DomainError("k must be positive");
    ResidueTable t;
    t.simple[0] = Rational(1, 2);
    for (long j = 1; j <= jmax; ++j) t.simple[1 - 2 * j] = pow_long(k, 2 * j - 1) * zeta_neg_odd(j);
    t.head2_at_1 = Rational(1, k);
    t.head1_at_1 = ExactValue(Rational(1, k)) * ExactValue::euler_gamma();
    return t;
}

ExactValue laurent_const_at_0(long k) {
    if (k < 1) throw DomainError("k must be positive");
    return ExactValue(Rational(1, 2 * k)) + ExactValue(Rational(1, 2)) * ExactValue::euler_gamma();
}

ExactValue laurent_const_at_1m2j(long k, long j) {
    if (k < 1 || j < 1) throw DomainError("laurent_const_at_1m2j needs k >= 1, j >= 1");
    // psi(2j) = H_{2j-1} - gamma
    ExactValue psi = ExactValue(harmonic(2 * j - 1)) - ExactValue::euler_gamma();
    ExactValue tail = ExactValue(-(pow_long(k, 2 * j - 1) * zeta_neg_odd(j))) * psi;
    if (j == 1) return ExactValue(Rational(1, 24 * k) - Rational(1, 4)) + tail;
    Rational s(0);
    for (long v = 1; v <= j; ++v)
        s += Rational(binomial(2 * j, 2 * v)) * bernoulli_number(2 * j - 2 * v) * bernoulli_number(2 * v) /
             (Rational(v) * pow_long(k, 2 * v));
    return ExactValue(pow_long(k, 2 * j - 1) / Rational(4 * j) * s) + tail;
}

Rational s_half_special(long m) {
    if (m < 0) throw DomainError("m must be non-negative");
    if (m == 0) return Rational(1, 2);
    return (Rational(1) - pow_long(2, 2 * m - 1)) * bernoulli_number(2 * m) / pow_long(2, 2 * m);
}

Rational zeta_O_special(long m) {
    if (m < 0) throw DomainError("m must be non-negative");
    return Rational(0);
}

std::pair<ExactValue, ExactValue> residues_S_and_O(long m) {
    if (m < 1) throw DomainError("m must be positive");
    Rational r = (pow(Rational(2), 1 - 2 * m) - Rational(1)) * zeta_neg_odd(m);
    return {ExactValue(r), ExactValue(r / Rational(2))};
}

std::vector<std::pair<std::string, ExactValue>> known_positive_values() {
    const ExactValue z3 = ExactValue::zeta(3);
    const ExactValue l2 = ExactValue::log(2);
    return {
        {"zeta_H(2)", ExactValue(2L) * z3},
        {"zeta_O(2)", ExactValue(Rational(7, 4)) * z3},
        {"S(2)", ExactValue(7L) * z3 - ExactValue::pi(2) * l2},
        {"eta_H(2)", ExactValue(Rational(5, 8)) * z3},
        {"eta_H(0)", ExactValue(Rational(1, 2)) * l2},
    };
}

}  // namespace hzeta
