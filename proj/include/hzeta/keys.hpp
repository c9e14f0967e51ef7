#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hzeta/precision.hpp"
#include "hzeta/rational.hpp"
#include "hzeta/real.hpp"
#include "hzeta/special_values.hpp"

namespace hzeta {

enum class Family {
    gamma,
    stieltjes,
    stieltjes_gen,
    zeta,
    zeta_deriv,
    zeta_deriv_at2,
    polygamma1,
    digamma,
    gammaA,
    gammaH,
    gammaH_half,
    gammaHminus,
    gammaO,
    dcoef,
    etaH_deriv,
    etaHminus_deriv,
    integral_i,
    integral_j,
    integral_k,
    zetaA_neg_even,
    s_half_special,
    zetaO_special,
    zeta_neg_odd,
};

struct FamilyInfo {
    Family family;
    const char* name;
    std::vector<const char*> params;  // in canonical order
    bool exact;                       // has a closed form (--exact)
};

const std::vector<FamilyInfo>& family_table();
const FamilyInfo& family_info(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct ConstantKey {
    Family family = Family::gamma;
    std::vector<Rational> params;  // same order as FamilyInfo::params
    int digits = 30;

    // "gammaA(k=2,m=3)"; digits are not part of the text form.
    std::string id() const;
    const Rational& param(const char* name) const;

    // Accepts "family", "family()" or "family(p=v,...)" with values that are
    // integers, fractions p/q or finite decimals. Throws DomainError on an
    // unknown family or a parameter mismatch.
    static ConstantKey parse(const std::string& text, int digits);
    // Checks arity and parameter domains.
    void validate() const;

    auto operator<=>(const ConstantKey& o) const {
        if (auto c = static_cast<int>(family) <=> static_cast<int>(o.family); c != 0) return c;
        if (params.size() != o.params.size()) return params.size() <=> o.params.size();
        for (size_t i = 0; i < params.size(); ++i) {
            if (params[i] < o.params[i]) return std::strong_ordering::less;
            if (o.params[i] < params[i]) return std::strong_ordering::greater;
        }
        return digits <=> o.digits;
    }
    bool operator==(const ConstantKey& o) const { return family == o.family && params == o.params && digits == o.digits; }
};

struct ConstantResult {
    ConstantKey key;
    Real value;
    Real error_bound;
    std::optional<ExactValue> exact;
};

// Guard digits added on top of key.digits when evaluating.
inline constexpr int kEvalGuard = 5;

ConstantResult evaluate(const ConstantKey& key);
// Closed form when the family has one, otherwise nullopt.
std::optional<ExactValue> exact_value(const ConstantKey& key);

// Round-half-even decimal with key.digits significant digits. Returns nullopt
// when the error bound is not below half a unit of the last printed digit.
std::optional<std::string> render_value(const Real& value, const Real& error_bound, int digits);

}  // namespace hzeta
