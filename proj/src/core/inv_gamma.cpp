#include "hzeta/inv_gamma.hpp"

#include "hzeta/combinatorics.hpp"
#include "hzeta/constants.hpp"
#include "hzeta/error.hpp"
#include "hzeta/power_series.hpp"

namespace hzeta {

std::vector<Real> inv_gamma_coeffs(int M, const PrecisionCtx& ctx) {
    if (M < 0) throw DomainError("order must be non-negative");
    // carry enough digits that m! [z^m] keeps full relative accuracy
    const PrecisionCtx inner = ctx.with_extra(5 + M / 4);
    const long bits = inner.working_bits();
    // 1/Gamma(1+z) = exp(gamma z - sum_{j>=2} (-1)^j zeta(j) z^j / j); 1/Gamma(s) at s=1+z
    PowerSeries a(M, bits);
    if (M >= 1) a[1] = euler_gamma(inner);
    for (int j = 2; j <= M; ++j) {
        Real z = zeta_real(Real(static_cast<long>(j), bits), inner) / static_cast<long>(j);
        a[j] = j % 2 == 0 ? -z : z;
    }
    PowerSeries e = a.exp();
    std::vector<Real> g;
    g.reserve(static_cast<size_t>(M) + 1);
    for (int m = 0; m <= M; ++m) g.push_back((e[m] * Rational(factorial(m))).at_prec(ctx.working_bits()));
    return g;
}

}  // namespace hzeta
