#include "hzeta/keys.hpp"

#include <algorithm>
#include <cctype>

#include "hzeta/constants.hpp"
#include "hzeta/error.hpp"
#include "hzeta/harmonic_stieltjes.hpp"
#include "hzeta/integrals.hpp"

namespace hzeta {

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = {
        {Family::gamma, "gamma", {}, false},
        {Family::stieltjes, "stieltjes", {"m"}, false},
        {Family::stieltjes_gen, "stieltjes_gen", {"m", "a"}, false},
        {Family::zeta, "zeta", {"s"}, false},
        {Family::zeta_deriv, "zeta_deriv", {"s", "r"}, false},
        {Family::zeta_deriv_at2, "zeta_deriv_at2", {"m"}, false},
        {Family::polygamma1, "polygamma1", {"m"}, false},
        {Family::digamma, "digamma", {"a"}, false},
        {Family::gammaA, "gammaA", {"k", "m"}, false},
        {Family::gammaH, "gammaH", {"m"}, false},
        {Family::gammaH_half, "gammaH_half", {"m"}, false},
        {Family::gammaHminus, "gammaHminus", {"m"}, false},
        {Family::gammaO, "gammaO", {"m"}, false},
        {Family::dcoef, "dcoef", {"m"}, false},
        {Family::etaH_deriv, "etaH_deriv", {"m"}, false},
        {Family::etaHminus_deriv, "etaHminus_deriv", {"m"}, false},
        {Family::integral_i, "integral_i", {"k", "m"}, false},
        {Family::integral_j, "integral_j", {"m"}, false},
        {Family::integral_k, "integral_k", {"m"}, false},
        {Family::zetaA_neg_even, "zetaA_neg_even", {"k", "m"}, true},
        {Family::s_half_special, "s_half_special", {"m"}, true},
        {Family::zetaO_special, "zetaO_special", {"m"}, true},
        {Family::zeta_neg_odd, "zeta_neg_odd", {"j"}, true},
    };
    return table;
}

const FamilyInfo& family_info(Family f) {
    for (const auto& info : family_table())
        if (info.family == f) return info;
    throw DomainError("unknown family");
}

std::optional<Family> family_from_name(const std::string& name) {
    for (const auto& info : family_table())
        if (name == info.name) return info.family;
    return std::nullopt;
}

std::string ConstantKey::id() const {
    const FamilyInfo& info = family_info(family);
    std::string out = info.name;
    out += "(";
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) out += ",";
        out += info.params[i];
        out += "=" + params[i].str();
    }
    return out + ")";
}

const Rational& ConstantKey::param(const char* name) const {
    const FamilyInfo& info = family_info(family);
    for (size_t i = 0; i < info.params.size(); ++i)
        if (std::string(info.params[i]) == name) return params.at(i);
    throw DomainError(std::string("no parameter ") + name + " in " + info.name);
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Rational parse_number(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw DomainError("empty parameter value");
    size_t dot = t.find('.');
    if (dot == std::string::npos) {
        try {
            return Rational::parse(t);
        } catch (const std::exception&) {
            throw DomainError("bad parameter value '" + t + "'");
        }
    }
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    const size_t frac = t.size() - dot - 1;
    bool ok = frac > 0 && !digits.empty();
    for (size_t i = 0; i < digits.size(); ++i)
        ok = ok && (std::isdigit(static_cast<unsigned char>(digits[i])) || (i == 0 && digits[i] == '-'));
    if (!ok) throw DomainError("bad parameter value '" + t + "'");
    return Rational(mpz_class(digits, 10), mpz_class("1" + std::string(frac, '0'), 10));
}

long as_long(const Rational& q, const char* name) {
    if (!q.is_integer()) throw DomainError(std::string("parameter ") + name + " must be an integer");
    return q.num().get_si();
}

}  // namespace

ConstantKey ConstantKey::parse(const std::string& text, int digits) {
    std::string t = trim(text);
    size_t open = t.find('(');
    std::string name = trim(t.substr(0, open));
    auto fam = family_from_name(name);
    if (!fam) throw DomainError("unknown family '" + name + "'");
    ConstantKey key;
    key.family = *fam;
    key.digits = digits;
    const FamilyInfo& info = family_info(*fam);
    std::vector<std::optional<Rational>> slots(info.params.size());
    if (open != std::string::npos) {
        if (t.back() != ')') throw DomainError("missing ')' in key '" + t + "'");
        std::string body = t.substr(open + 1, t.size() - open - 2);
        size_t pos = 0;
        while (!trim(body).empty() && pos <= body.size()) {
            size_t comma = body.find(',', pos);
            std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            size_t eq = item.find('=');
            if (eq == std::string::npos) throw DomainError("parameter '" + trim(item) + "' needs name=value");
            std::string pname = trim(item.substr(0, eq));
            auto it = std::find_if(info.params.begin(), info.params.end(),
                                   [&](const char* p) { return pname == p; });
            if (it == info.params.end()) throw DomainError("unknown parameter '" + pname + "' for " + name);
            auto& slot = slots[static_cast<size_t>(it - info.params.begin())];
            if (slot) throw DomainError("duplicate parameter '" + pname + "'");
            slot = parse_number(item.substr(eq + 1));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    for (size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]) throw DomainError(std::string("missing parameter ") + info.params[i] + " for " + name);
        key.params.push_back(*slots[i]);
    }
    key.validate();
    return key;
}

void ConstantKey::validate() const {
    const FamilyInfo& info = family_info(family);
    if (params.size() != info.params.size()) throw DomainError("wrong number of parameters for " + std::string(info.name));
    if (digits < 10) throw DomainError("digits must be at least 10");
    for (size_t i = 0; i < params.size(); ++i) {
        const std::string p = info.params[i];
        if (p == "s") continue;
        if (p == "a") {
            if (params[i].sign() <= 0) throw DomainError("parameter a must be positive");
            continue;
        }
        long v = as_long(params[i], info.params[i]);
        if ((p == "k" || p == "j") && v < 1) throw DomainError("parameter " + p + " must be positive");
        if (v < 0) throw DomainError("parameter " + p + " must be non-negative");
        if (p == "m" && v > kMaxOrder) throw DomainError("parameter m must be at most " + std::to_string(kMaxOrder));
    }
    if (family == Family::zetaA_neg_even && params[1].sign() <= 0) throw DomainError("zetaA_neg_even needs m >= 1");
    if (family == Family::zeta || family == Family::zeta_deriv) {
        if (params[0] == Rational(1)) throw PoleError("zeta has a pole at s = 1");
    }
}

std::optional<ExactValue> exact_value(const ConstantKey& key) {
    switch (key.family) {
        case Family::zetaA_neg_even:
            return ExactValue(zeta_A_neg_even(as_long(key.params[0], "k"), as_long(key.params[1], "m")));
        case Family::s_half_special: return ExactValue(s_half_special(as_long(key.params[0], "m")));
        case Family::zetaO_special: return ExactValue(zeta_O_special(as_long(key.params[0], "m")));
        case Family::zeta_neg_odd: return ExactValue(zeta_neg_odd(as_long(key.params[0], "j")));
        default: return std::nullopt;
    }
}

namespace {

// Nominal bound for routines that return a value correct to the working precision.
Real nominal_bound(const Real& v, const PrecisionCtx& ctx) {
    const long bits = ctx.working_bits();
    return max(Real(1L, bits), abs(v)) * pow10_neg(ctx.working_digits() - 2, bits);
}

ConstantResult from_real(const ConstantKey& key, Real v, const PrecisionCtx& ctx) {
    Real e = nominal_bound(v, ctx);
    return {key, std::move(v), std::move(e), std::nullopt};
}

ConstantResult from_estimate(const ConstantKey& key, const Estimate& e) { return {key, e.value, e.error, std::nullopt}; }

}  // namespace

ConstantResult evaluate(const ConstantKey& key) {
    key.validate();
    const PrecisionCtx ctx(key.digits + kEvalGuard);
    const long bits = ctx.working_bits();
    auto p = [&](size_t i) { return key.params[i]; };
    auto n = [&](size_t i) { return static_cast<int>(as_long(key.params[i], family_info(key.family).params[i])); };
    switch (key.family) {
        case Family::gamma: return from_real(key, euler_gamma(ctx), ctx);
        case Family::stieltjes: return from_real(key, stieltjes(n(0), ctx), ctx);
        case Family::stieltjes_gen: return from_real(key, stieltjes_gen(n(0), p(1), ctx), ctx);
        case Family::zeta: return from_real(key, zeta_real(Real(p(0), bits), ctx), ctx);
        case Family::zeta_deriv: return from_real(key, zeta_deriv_real(Real(p(0), bits), n(1), ctx), ctx);
        case Family::zeta_deriv_at2: return from_real(key, zeta_deriv_at_2(n(0), ctx), ctx);
        case Family::polygamma1: return from_real(key, polygamma_at_1(n(0), ctx), ctx);
        case Family::digamma: return from_real(key, digamma(p(0), ctx), ctx);
        case Family::gammaA: return from_estimate(key, gamma_A(n(0), n(1), ctx));
        case Family::gammaH: return from_estimate(key, gamma_H(n(0), ctx));
        case Family::gammaH_half: return from_estimate(key, gamma_H_half(n(0), ctx));
        case Family::gammaHminus: return from_estimate(key, gamma_Hminus(n(0), ctx));
        case Family::gammaO: return from_estimate(key, gamma_O(n(0), ctx));
        case Family::dcoef: return from_estimate(key, d_coefficient(n(0), ctx));
        case Family::etaH_deriv: return from_estimate(key, eta_H_deriv(n(0), ctx));
        case Family::etaHminus_deriv: return from_estimate(key, eta_Hminus_deriv(n(0), ctx));
        case Family::integral_i: {
            IntegralResult r = integral_i(n(1), n(0), ctx);
            return {key, r.value, r.error_bound, std::nullopt};
        }
        case Family::integral_j: {
            IntegralResult r = integral_j(n(0), ctx);
            return {key, r.value, r.error_bound, std::nullopt};
        }
        case Family::integral_k: {
            IntegralResult r = integral_k_alt(n(0), ctx);
            return {key, r.value, r.error_bound, std::nullopt};
        }
        case Family::zetaA_neg_even:
        case Family::s_half_special:
        case Family::zetaO_special:
        case Family::zeta_neg_odd: {
            ExactValue ev = *exact_value(key);
            return {key, ev.render(ctx), Real(0L, bits), ev};
        }
    }
    throw DomainError("unhandled family");
}

std::optional<std::string> render_value(const Real& value, const Real& error_bound, int digits) {
    if (value.is_zero()) {
        if (error_bound.is_zero()) return std::string("0");
        return std::nullopt;
    }
    const long bits = std::max(value.prec(), bits_for_digits(digits + 5));
    // printed digits start at 10^e, last printed unit is 10^(e - digits + 1)
    std::string text = value.to_sci(digits);
    long e10 = std::stol(text.substr(text.find('e') + 1));
    Real half_ulp = Real(1L, bits);
    long exp_last = e10 - digits + 1;
    half_ulp = exp_last >= 0 ? pow(Real(10L, bits), exp_last) : pow10_neg(-exp_last, bits);
    half_ulp /= 2L;
    if (!(error_bound < half_ulp)) return std::nullopt;
    return value.to_decimal(digits);
}

}  // namespace hzeta
