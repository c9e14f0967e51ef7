#include "hzeta/euler_maclaurin.hpp"

#include "hzeta/combinatorics.hpp"
#include "hzeta/error.hpp"

namespace hzeta {

namespace {

Real horner(const std::vector<Real>& p, const Real& L) {
    Real acc = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) {
        acc *= L;
        acc += p[i];
    }
    return acc;
}

}  // namespace

Estimate em_endpoint(const Real& sigma, const Real& W, std::vector<Real> poly, const Real& tol) {
    const long bits = W.prec();
    const Real L = log(W);
    const Real invW = 1L / W;
    Real wp = exp(-(sigma * L));  // W^(-sigma-p)
    const Real f0 = wp * horner(poly, L);
    Real sum = f0 / 2L;
    const Real scale = max(abs(f0), abs(sum));
    Real min_mag;  // smallest term so far
    const int max_p = 2000;
    for (int p = 0; p < max_p; ++p) {
        // P_{p+1} = (-sigma-p) P_p + P_p'
        Real c = -sigma - static_cast<long>(p);
        for (size_t d = 0; d < poly.size(); ++d) {
            poly[d] *= c;
            if (d + 1 < poly.size()) poly[d] += poly[d + 1] * static_cast<long>(d + 1);
        }
        wp *= invW;
        if (p % 2 == 1) continue;
        // f^(p+1)(W) with p+1 = 2j-1 odd
        const long twoj = p + 2;
        Rational coef = bernoulli_number(twoj) / Rational(factorial(twoj));
        Real term = wp * horner(poly, L) * coef;
        Real mag = abs(term);
        sum -= term;
        if (mag <= tol * max(scale, abs(sum))) return {sum, mag + ldexp(abs(sum), 4 - bits)};
        if (!min_mag.is_finite() || mag < min_mag) min_mag = mag;
        if (p > 40 && mag > ldexp(min_mag, 64)) throw NonConvergence("Euler-Maclaurin endpoint series diverged before reaching tolerance");
    }
    throw NonConvergence("Euler-Maclaurin endpoint series did not converge");
}

std::vector<Estimate> hurwitz_tail(const Real& sigma, const Real& W, int R, const Real& tol) {
    const long bits = W.prec();
    const Real sm1 = sigma - 1L;
    if (sm1.is_zero()) throw PoleError("Hurwitz tail at sigma = 1");
    const Real L = log(W);
    const Real w1 = exp(-(sm1 * L));  // W^(1-sigma)
    const Real inv = 1L / sm1;
    std::vector<Estimate> out;
    out.reserve(static_cast<size_t>(R) + 1);
    for (int r = 0; r <= R; ++r) {
        // (-1)^r W^(1-sigma) sum_l r!/(r-l)! L^(r-l) / (sigma-1)^(l+1)
        Real acc(0L, bits);
        Real falling(1L, bits);  // r!/(r-l)!
        Real ip = inv;           // (sigma-1)^-(l+1)
        for (int l = 0; l <= r; ++l) {
            acc += falling * pow(L, static_cast<long>(r - l)) * ip;
            falling *= static_cast<long>(r - l);
            ip *= inv;
        }
        acc *= w1;
        if (r % 2 == 1) acc = -acc;
        std::vector<Real> poly(static_cast<size_t>(r) + 1, Real(0L, bits));
        poly[static_cast<size_t>(r)] = Real(r % 2 == 0 ? 1L : -1L, bits);
        Estimate e = em_endpoint(sigma, W, std::move(poly), tol);
        out.push_back({acc + e.value, e.error + ldexp(abs(acc), 4 - bits)});
    }
    return out;
}

}  // namespace hzeta
