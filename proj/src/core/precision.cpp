#include "hzeta/precision.hpp"

#include <algorithm>
#include <cmath>

#include "hzeta/error.hpp"

namespace hzeta {

PrecisionCtx::PrecisionCtx(int target, int guard) : target_digits(target), guard_digits(guard) {
    if (target < 1) throw DomainError("target digits must be positive");
    if (guard < 10) throw DomainError("guard digits must be at least 10");
}

long bits_for_digits(int digits) {
    return std::max(64L, static_cast<long>(std::ceil(digits * std::log2(10.0))));
}

long PrecisionCtx::working_bits() const { return bits_for_digits(working_digits()); }

}  // namespace hzeta
