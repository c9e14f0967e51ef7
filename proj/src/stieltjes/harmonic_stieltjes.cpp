#include "hzeta/harmonic_stieltjes.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "hzeta/combinatorics.hpp"
#include "hzeta/constants.hpp"
#include "hzeta/error.hpp"
#include "hzeta/integrals.hpp"
#include "hzeta/inv_gamma.hpp"

namespace hzeta {

namespace {

using Vec = std::vector<Estimate>;

Real binom(long n, long k, long bits) { return Real(Rational(binomial(n, k)), bits); }

long sgn(long p) { return p % 2 == 0 ? 1 : -1; }

// Sum of estimates that also tracks the magnitude of the summands, so the
// rounding of cancelling sums can be charged to the bound.
struct Acc {
    Estimate sum;
    Real mag;
    explicit Acc(long bits) : sum(Real(0L, bits), Real(0L, bits)), mag(0L, bits) {}
    void add(const Estimate& e) {
        sum += e;
        mag += abs(e.value);
    }
    Estimate done() const {
        Estimate r = sum;
        r.error += ldexp(mag, 8 - mag.prec());
        return r;
    }
};

Vec from_results(const std::vector<IntegralResult>& r) {
    Vec out;
    for (const auto& e : r) out.emplace_back(e.value, e.error_bound);
    return out;
}

int capacity_for(int m) {
    if (m < 0) throw DomainError("order must be non-negative");
    for (int c : {10, 20, 30, kMaxOrder})
        if (m <= c) return c;
    throw DomainError("order exceeds " + std::to_string(kMaxOrder));
}

// All coefficients up to a fixed capacity, at a precision that depends only on
// (target, guard, capacity).
class Engine {
public:
    Engine(const PrecisionCtx& outer, int cap)
        : cap_(cap), ctx_(outer.with_extra(5 + static_cast<int>(std::ceil(std::lgamma(cap + 1.0) / std::log(10.0))))),
          bits_(ctx_.working_bits()) {}

    Estimate gamma_A(long k, int m) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = gamma_A_.find(k);
        if (it == gamma_A_.end()) it = gamma_A_.emplace(k, compute_gamma_A(k)).first;
        return it->second[static_cast<size_t>(m)];
    }

    Estimate eta_H(int v) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        if (eta_H_.empty()) {
            const Vec& g = inv_gamma();
            Vec K = from_results(integral_k_alt_all(cap_, ctx_));
            for (int j = 0; j <= cap_; ++j) {
                Acc a(bits_);
                for (int i = 0; i <= j; ++i) a.add(g[static_cast<size_t>(j - i)] * K[static_cast<size_t>(i)] * binom(j, i, bits_));
                eta_H_.push_back(a.done());
            }
        }
        return eta_H_[static_cast<size_t>(v)];
    }

    Estimate eta_Hminus(int v) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        if (eta_Hm_.empty()) {
            const Vec& g = inv_gamma();
            Vec J = from_results(integral_j_all(cap_, ctx_));
            for (int j = 0; j <= cap_; ++j) {
                Acc a(bits_);
                for (int i = 0; i <= j; ++i) a.add(-(g[static_cast<size_t>(j - i)] * J[static_cast<size_t>(i)] * binom(j, i, bits_)));
                eta_Hm_.push_back(a.done());
            }
        }
        return eta_Hm_[static_cast<size_t>(v)];
    }

    // gamma_H(m, 1/2) by (A) the gamma_A(2) route or (B) the eta_{H-} route.
    Estimate gamma_H_half(int m, HalfMethod method) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        const Vec& L = ln2_powers();
        const Estimate gam = Estimate::of(euler_gamma(ctx_));
        Acc a(bits_);
        a.add(-gamma_A(1, m));
        Estimate head = (L[1] * Real(Rational(1, m + 2), bits_) + gam) * L[static_cast<size_t>(m + 1)] *
                        Real(Rational(2 * sgn(m), m + 1), bits_);
        a.add(head);
        for (int j = 0; j <= m; ++j) {
            Real c = binom(m, j, bits_);
            Estimate t = method == HalfMethod::A
                             ? gamma_A(2, j) * L[static_cast<size_t>(m - j)] * (c * (4 * sgn(m - j)))
                             : (gamma_A(1, j) * sgn(j) + eta_Hminus(j)) * L[static_cast<size_t>(m - j)] * (c * (2 * sgn(m)));
            a.add(t);
        }
        return a.done();
    }

    Estimate gamma_H_half_checked(int m, HalfMethod method) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        Estimate A = gamma_H_half(m, HalfMethod::A);
        Estimate B = gamma_H_half(m, HalfMethod::B);
        if (abs(A.value - B.value) > (A.error + B.error) * 10L)
            throw MethodDisagreement("gamma_H_half(" + std::to_string(m) + "): methods A and B disagree by " +
                                     abs(A.value - B.value).to_sci(3));
        return method == HalfMethod::A ? A : B;
    }

    Estimate gamma_Hminus(int m) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        const Vec& L = ln2_powers();
        Acc a(bits_);
        a.add(-(eta_H(m) * sgn(m)));
        for (int v = 0; v <= m; ++v) {
            Estimate inner = gamma_H_half_checked(v, HalfMethod::A) - gamma_A(1, v) -
                             L[static_cast<size_t>(v + 1)] * Real(Rational(2 * sgn(v), v + 1), bits_);
            a.add(inner * L[static_cast<size_t>(m - v)] * (binom(m, v, bits_) / 2L));
        }
        return a.done();
    }

    Estimate gamma_O(int n) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        const Vec& L = ln2_powers();
        Acc a(bits_);
        a.add(ln2_head(n));
        a.add(-(gamma_A(1, n) * Real(Rational(1, 2), bits_)));
        for (int v = 0; v <= n; ++v)
            a.add((gamma_A(1, v) * sgn(v) - eta_H(v)) * L[static_cast<size_t>(n - v)] * (binom(n, v, bits_) * sgn(n)));
        return a.done();
    }

    Estimate d_coefficient(int n) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        const Vec& L = ln2_powers();
        Acc a(bits_);
        a.add(-gamma_H_half_checked(n, HalfMethod::A));
        a.add(ln2_head(n) * 2L);
        for (int v = 0; v <= n; ++v)
            a.add((gamma_A(1, v) * sgn(v) + eta_H(v)) * L[static_cast<size_t>(n - v)] * (binom(n, v, bits_) * (2 * sgn(n))));
        return a.done();
    }

    Estimate raabe_sum(long k, int n) {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        Vec L = log_powers(k, n + 1);
        const Estimate gam = Estimate::of(euler_gamma(ctx_));
        Acc a(bits_);
        a.add((L[1] * Real(Rational(1, n + 2), bits_) + gam) * L[static_cast<size_t>(n + 1)] *
              Real(Rational(k * sgn(n), n + 1), bits_));
        for (int j = 0; j <= n; ++j)
            a.add(gamma_A(k, j) * L[static_cast<size_t>(n - j)] * (binom(n, j, bits_) * (k * k * sgn(n - j))));
        return a.done();
    }

private:
    // (-1)^n (ln2/(n+2) + gamma) ln2^{n+1}/(n+1)
    Estimate ln2_head(int n) {
        const Vec& L = ln2_powers();
        const Estimate gam = Estimate::of(euler_gamma(ctx_));
        return (L[1] * Real(Rational(1, n + 2), bits_) + gam) * L[static_cast<size_t>(n + 1)] *
               Real(Rational(sgn(n), n + 1), bits_);
    }

    Vec log_powers(long k, int n) const {
        Estimate L = Estimate::of(log(Real(k, bits_)));
        Vec out{Estimate::exact(Real(1L, bits_))};
        for (int p = 1; p <= n; ++p) out.push_back(out.back() * L);
        return out;
    }

    const Vec& ln2_powers() {
        if (ln2_.empty()) ln2_ = log_powers(2, cap_ + 2);
        return ln2_;
    }

    const Vec& inv_gamma() {
        if (g_.empty())
            for (auto& v : inv_gamma_coeffs(cap_, ctx_)) g_.push_back(Estimate::of(v));
        return g_;
    }

    const Vec& stieltjes1() {
        if (st_.empty()) st_ = stieltjes_all(cap_ + 1, Rational(1), ctx_);
        return st_;
    }

    const Vec& psi1() {
        if (psi_.empty())
            for (int v = 0; v <= cap_ + 1; ++v) psi_.push_back(Estimate::of(polygamma_at_1(v, ctx_)));
        return psi_;
    }

    const Vec& zeta2() {
        if (z2_.empty()) z2_ = zeta_derivs(Real(2L, bits_), cap_, ctx_);
        return z2_;
    }

    Vec compute_gamma_A(long k) {
        if (k < 1) throw DomainError("k must be positive");
        const Vec& g = inv_gamma();
        const Vec& st = stieltjes1();
        const Vec& psi = psi1();
        const Vec& z2 = zeta2();
        Vec iv = from_results(integral_i_all(cap_, k, ctx_));
        Vec L = log_powers(k, cap_ + 1);
        const Real inv_k(Rational(1, k), bits_);
        Vec out;
        for (int m = 0; m <= cap_; ++m) {
            const auto M = static_cast<size_t>(m);
            Acc a(bits_);
            a.add(z2[M] * sgn(m));
            for (int v = 0; v <= m; ++v) {
                const auto V = static_cast<size_t>(v);
                Real c = binom(m, v, bits_);
                a.add(psi[V + 1] * L[M - V] * (-inv_k * c * sgn(v) / static_cast<long>(v + 1)));
                a.add(g[M - V] * iv[V] * (c * sgn(m)));
                a.add((st[V] * L[1] + st[V + 1]) * L[M - V] * (inv_k * c));
            }
            a.add((psi[0] - L[1] * Real(Rational(m + 1, m + 2), bits_)) * L[M + 1] * Real(Rational(1, k * (m + 1)), bits_));
            for (int j = 0; j <= m; ++j) {
                const auto Jx = static_cast<size_t>(j);
                Acc inner(bits_);
                for (int v = 0; v <= j; ++v)
                    inner.add(psi[Jx - static_cast<size_t>(v)] * st[static_cast<size_t>(v)] * (binom(j, v, bits_) * sgn(v)));
                a.add(inner.done() * L[M - Jx] * (-inv_k * binom(m, j, bits_) * sgn(j)));
            }
            out.push_back(a.done());
        }
        return out;
    }

    int cap_;
    PrecisionCtx ctx_;
    long bits_;
    std::recursive_mutex mu_;
    std::map<long, Vec> gamma_A_;
    Vec eta_H_, eta_Hm_, ln2_, g_, st_, psi_, z2_;
};

Engine& engine(const PrecisionCtx& ctx, int m) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<Engine>> engines;
    const int cap = capacity_for(m);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = engines[{ctx.target_digits, ctx.guard_digits, cap}];
    if (!slot) slot = std::make_unique<Engine>(ctx, cap);
    return *slot;
}

Estimate round_out(const Estimate& e, const PrecisionCtx& ctx) {
    const long bits = ctx.working_bits();
    Real v = e.value.at_prec(bits);
    return {v, e.error.at_prec(bits) + ldexp(abs(v), 1 - bits)};
}

}  // namespace

LaurentHead laurent_head(HarmonicFamily family, long k, const PrecisionCtx& ctx) {
    const long bits = ctx.working_bits();
    const Real gam = euler_gamma(ctx);
    const Real l2 = Real::ln2(bits);
    const Real one(1L, bits);
    switch (family) {
        case HarmonicFamily::zeta_A:
            if (k < 1) throw DomainError("k must be positive");
            return {one / k, gam / k, "gammaA"};
        case HarmonicFamily::zeta_H: return {one, gam, "gammaH"};
        case HarmonicFamily::zeta_H_half: return {one, gam + l2 * 2L, "gammaHhalf"};
        case HarmonicFamily::zeta_Hminus: return {Real(0L, bits), l2, "gammaHminus"};
        case HarmonicFamily::zeta_O: return {one / 2L, l2 + gam / 2L, "gammaO"};
        case HarmonicFamily::s_half: return {one, gam, "dcoef"};
    }
    throw DomainError("unknown family");
}

Estimate gamma_A(long k, int m, const PrecisionCtx& ctx) {
    if (k < 1) throw DomainError("k must be positive");
    return round_out(engine(ctx, m).gamma_A(k, m), ctx);
}

Estimate gamma_H(int m, const PrecisionCtx& ctx) { return gamma_A(1, m, ctx); }

Estimate eta_H_deriv(int v, const PrecisionCtx& ctx) { return round_out(engine(ctx, v).eta_H(v), ctx); }

Estimate gamma_tilde_H(int v, const PrecisionCtx& ctx) {
    Estimate e = eta_H_deriv(v, ctx);
    return v % 2 == 0 ? e : -e;
}

Estimate eta_Hminus_deriv(int j, const PrecisionCtx& ctx) { return round_out(engine(ctx, j).eta_Hminus(j), ctx); }

Estimate gamma_H_half(int m, const PrecisionCtx& ctx, HalfMethod method) {
    return round_out(engine(ctx, m).gamma_H_half_checked(m, method), ctx);
}

Estimate gamma_Hminus(int m, const PrecisionCtx& ctx) { return round_out(engine(ctx, m).gamma_Hminus(m), ctx); }

Estimate gamma_O(int n, const PrecisionCtx& ctx) { return round_out(engine(ctx, n).gamma_O(n), ctx); }

Estimate d_coefficient(int n, const PrecisionCtx& ctx) { return round_out(engine(ctx, n).d_coefficient(n), ctx); }

Estimate raabe_gamma_sum(long k, int n, const PrecisionCtx& ctx) {
    if (k < 1) throw DomainError("k must be positive");
    return round_out(engine(ctx, n).raabe_sum(k, n), ctx);
}

}  // namespace hzeta
