#include "hzeta/identities.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "hzeta/combinatorics.hpp"
#include "hzeta/constants.hpp"
#include "hzeta/error.hpp"
#include "hzeta/harmonic_stieltjes.hpp"
#include "hzeta/integrals.hpp"
#include "hzeta/oracles.hpp"
#include "hzeta/special_values.hpp"

namespace hzeta {

int agreement_digits(const Real& a, const Real& b, int cap) {
    Real d = abs(a - b);
    if (d.is_zero()) return cap;
    Real scale = max(Real(1L, b.prec()), abs(b));
    double digits = -(d / scale).log10_abs();
    if (digits >= cap) return cap;
    return static_cast<int>(std::floor(digits));
}

namespace {

int resolve(int threshold, const PrecisionCtx& ctx) { return threshold < 0 ? ctx.target_digits - 10 : threshold; }

IdentityReport single(std::string id, const Real& s, const Real& lhs, const Real& rhs, int threshold,
                      const PrecisionCtx& ctx) {
    IdentityReport r;
    r.identity_id = std::move(id);
    r.threshold = threshold;
    int d = agreement_digits(lhs, rhs, ctx.working_digits());
    r.points.push_back({s, lhs, rhs, d});
    r.pass = d >= threshold;
    return r;
}

struct Sums {
    Real zH, zHhalf, etaH, etaHm, zO, S, pw;
};

Sums sums_at(const Real& s, const PrecisionCtx& ctx, bool need_half, bool need_minus, bool need_S) {
    const long bits = ctx.working_bits();
    Sums r;
    r.zH = zeta_H_series(s, Rational(1), ctx).value;
    r.etaH = eta_H_series(s, ctx).value;
    r.zO = zeta_O_series(s, ctx).value;
    if (need_half) r.zHhalf = zeta_H_series(s, Rational(1, 2), ctx).value;
    if (need_minus) r.etaHm = eta_Hminus_series(s, ctx).value;
    if (need_S) r.S = s_half_series(s, ctx).value;
    r.pw = pow(Real(2L, bits), s.at_prec(bits));
    return r;
}

std::string with_param(const std::string& id, const std::string& p) { return id + "[" + p + "]"; }

}  // namespace

IdentityReport check_raabe(long k, const Real& s, const PrecisionCtx& ctx, int threshold) {
    if (k < 1) throw DomainError("k must be positive");
    const long bits = ctx.working_bits();
    Real lhs(0L, bits);
    for (long a = 1; a <= k; ++a) lhs += zeta_H_series(s, Rational(a, k), ctx).value;
    Real rhs = pow(Real(k, bits), s.at_prec(bits) + 1L) * zeta_A_series(k, s, ctx).value;
    return single(with_param("raabe", "k=" + std::to_string(k)), s, lhs, rhs, resolve(threshold, ctx), ctx);
}

IdentityReport check_half_shift(const Real& s, const PrecisionCtx& ctx, int threshold) {
    Sums v = sums_at(s, ctx, true, true, false);
    Real rhs = (v.pw - 1L) * v.zH + v.pw * v.etaHm;
    return single("half_shift", s, v.zHhalf, rhs, resolve(threshold, ctx), ctx);
}

IdentityReport check_s_half_split(const Real& s, const PrecisionCtx& ctx, int threshold) {
    Sums v = sums_at(s, ctx, true, false, true);
    Real rhs = v.pw * (v.etaH + v.zH) - v.zHhalf;
    return single("s_half_split", s, v.S, rhs, resolve(threshold, ctx), ctx);
}

IdentityReport check_odd_zeta(const Real& s, const PrecisionCtx& ctx, int threshold) {
    Sums v = sums_at(s, ctx, false, false, false);
    Real rhs = (v.pw - 1L) * v.zH / 2L - v.pw / 2L * v.etaH;
    return single("odd_zeta", s, v.zO, rhs, resolve(threshold, ctx), ctx);
}

IdentityReport check_integer_relations(long m, char variant, const PrecisionCtx& ctx, int threshold) {
    if (m < 2) throw DomainError("check_integer_relations needs m >= 2");
    const long bits = ctx.working_bits();
    const Real s(m, bits);
    Sums v = sums_at(s, ctx, variant == 'b', variant == 'c', variant != 'a');
    Real lhs, rhs;
    switch (variant) {
        case 'a':
            lhs = v.pw / 2L * v.etaH;
            rhs = (v.pw - 1L) * v.zH / 2L - v.zO;
            break;
        case 'b':
            lhs = v.zHhalf;
            rhs = (v.pw * 2L - 1L) * v.zH - v.zO * 2L - v.S;
            break;
        case 'c':
            lhs = v.pw * v.etaHm;
            rhs = v.pw * v.zH - v.zO * 2L - v.S;
            break;
        default: throw DomainError("check_integer_relations variant must be a, b or c");
    }
    return single(std::string("integer_rel_") + variant, s, lhs, rhs, resolve(threshold, ctx), ctx);
}

IdentityReport check_integral_repr_integer(long k, long n, const PrecisionCtx& ctx, int threshold) {
    if (k < 1 || n < 2) throw DomainError("check_integral_repr_integer needs k >= 1, n >= 2");
    const PrecisionCtx inner = ctx.with_extra(5);
    const long bits = inner.working_bits();
    const Real N(n, bits);
    auto z = zeta_derivs(N, 1, inner);
    Real psi = Real(harmonic(n - 1), bits) - euler_gamma(inner);
    Real lk = log(Real(k, bits));
    Real rhs = mellin_f(N, k, 2, inner).value + zeta_real(N + 1L, inner) -
               pow(Real(k, bits), -n) * (psi * z[0].value + z[1].value - z[0].value * lk);
    Real lhs = zeta_A_series(k, N, ctx).value;
    return single(with_param("integral_repr_integer", "k=" + std::to_string(k)), Real(n, ctx.working_bits()), lhs,
                  rhs.at_prec(ctx.working_bits()), resolve(threshold, ctx), ctx);
}

std::vector<IdentityReport> check_anchors(const PrecisionCtx& ctx, int threshold) {
    const long bits = ctx.working_bits();
    const Real two(2L, bits);
    const int th = threshold < 0 ? std::min(25, ctx.target_digits) : threshold;
    auto table = known_positive_values();
    std::map<std::string, ExactValue> known(table.begin(), table.end());
    return {
        single("anchor_zetaO_2", two, zeta_O_series(two, ctx).value, known.at("zeta_O(2)").render(ctx), th, ctx),
        single("anchor_S_2", two, s_half_series(two, ctx).value, known.at("S(2)").render(ctx), th, ctx),
    };
}

std::vector<IdentityReport> check_sum_identities(int N, const PrecisionCtx& ctx) {
    if (N < 1 || N > kMaxOrder) throw DomainError("sum identities need 1 <= N <= " + std::to_string(kMaxOrder));
    const long bits = ctx.working_bits();
    const Real g = euler_gamma(ctx);
    const Real l2 = Real::ln2(bits);
    const Real pi = Real::pi(bits);
    const Real z3 = zeta_real(Real(3L, bits), ctx);
    const Real tol = Real::parse("1e-6", bits);

    struct Series {
        std::string id;
        bool alternating;
        bool d;
        Real target;
    };
    const std::vector<Series> series = {
        {"sum_d", false, true, g - Real(Rational(1, 2), bits)},
        {"sum_gammaO", false, false, (g - 1L) / 2L + l2},
        {"alt_sum_d", true, true, z3 * 7L - g - pi * pi * l2 - 1L},
        {"alt_sum_gammaO", true, false, z3 * 7L / 4L - (g + 1L) / 2L - l2},
    };
    std::vector<IdentityReport> out;
    for (const auto& ser : series) {
        Real sum(0L, bits);
        Real last(0L, bits);
        for (int n = 0; n <= N; ++n) {
            Real c = ser.d ? d_coefficient(n, ctx).value : gamma_O(n, ctx).value;
            Real t = c / Real(Rational(factorial(n)), bits);
            if (ser.alternating && n % 2 == 1) t = -t;
            sum += t;
            last = abs(t);
        }
        // geometric tail with ratio 1/2: sum_{j>=1} last / 2^j
        Real err = abs(sum - ser.target) + last;
        IdentityReport r;
        r.identity_id = ser.id;
        r.threshold = 6;
        r.points.push_back({Real(N, bits), sum, ser.target, agreement_digits(sum, ser.target, ctx.working_digits())});
        r.pass = err < tol;
        out.push_back(std::move(r));
    }
    return out;
}

IdentityReport check_raabe_gamma_closure(int n_max, const PrecisionCtx& ctx, int threshold) {
    IdentityReport r;
    r.identity_id = "raabe_gamma_sum[k=2]";
    r.threshold = resolve(threshold, ctx);
    r.pass = true;
    const long bits = ctx.working_bits();
    for (int n = 0; n <= n_max; ++n) {
        Real lhs = raabe_gamma_sum(2, n, ctx).value;
        Real rhs = gamma_H_half(n, ctx).value + gamma_H(n, ctx).value;
        int d = agreement_digits(lhs, rhs, ctx.working_digits());
        r.points.push_back({Real(n, bits), lhs, rhs, d});
        r.pass = r.pass && d >= r.threshold;
    }
    return r;
}

std::vector<IdentityReport> merge_reports(const std::vector<IdentityReport>& reports) {
    std::vector<IdentityReport> out;
    std::map<std::string, size_t> index;
    for (const auto& r : reports) {
        auto it = index.find(r.identity_id);
        if (it == index.end()) {
            index[r.identity_id] = out.size();
            out.push_back(r);
            continue;
        }
        IdentityReport& m = out[it->second];
        m.points.insert(m.points.end(), r.points.begin(), r.points.end());
        m.pass = m.pass && r.pass;
        m.threshold = std::max(m.threshold, r.threshold);
    }
    return out;
}

namespace {

using Task = std::function<std::vector<IdentityReport>()>;

std::vector<IdentityReport> run_tasks(const std::vector<Task>& tasks, Exec exec) {
    std::vector<std::vector<IdentityReport>> slots(tasks.size());
    std::vector<std::string> errors(tasks.size());
    auto run = [&](size_t i) {
        try {
            slots[i] = tasks[i]();
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    };
    const long n = static_cast<long>(tasks.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < n; ++i) run(static_cast<size_t>(i));
    } else {
        for (long i = 0; i < n; ++i) run(static_cast<size_t>(i));
    }
    std::vector<IdentityReport> flat;
    for (size_t i = 0; i < tasks.size(); ++i) {
        if (!errors[i].empty()) throw NonConvergence(errors[i]);
        flat.insert(flat.end(), slots[i].begin(), slots[i].end());
    }
    return merge_reports(flat);
}

template <typename F>
Task one(F f) {
    return [f] { return std::vector<IdentityReport>{f()}; };
}

}  // namespace

std::vector<IdentityReport> identity_suite(const PrecisionCtx& ctx, Exec exec) {
    const long bits = ctx.working_bits();
    const int th = std::max(20, ctx.target_digits - 10);
    std::vector<Real> pts = {Real(2L, bits), Real::parse("2.5", bits), Real(3L, bits)};
    std::vector<Task> tasks;
    for (const Real& s : pts) {
        for (long k = 1; k <= 3; ++k) tasks.push_back(one([=, &ctx] { return check_raabe(k, s, ctx, th); }));
        tasks.push_back(one([=, &ctx] { return check_half_shift(s, ctx, th); }));
        tasks.push_back(one([=, &ctx] { return check_s_half_split(s, ctx, th); }));
        tasks.push_back(one([=, &ctx] { return check_odd_zeta(s, ctx, th); }));
    }
    for (long m = 2; m <= 3; ++m)
        for (char v : {'a', 'b', 'c'}) tasks.push_back(one([=, &ctx] { return check_integer_relations(m, v, ctx, th); }));
    for (long k = 1; k <= 3; ++k)
        for (long n = 2; n <= 4; ++n) tasks.push_back(one([=, &ctx] { return check_integral_repr_integer(k, n, ctx, th); }));
    tasks.push_back([&ctx] { return check_anchors(ctx); });
    tasks.push_back([&ctx] { return check_sum_identities(30, ctx); });
    tasks.push_back(one([&ctx] { return check_raabe_gamma_closure(8, ctx); }));
    return run_tasks(tasks, exec);
}

std::vector<IdentityReport> oracle_suite(const PrecisionCtx& ctx, Exec exec) {
    const long bits = ctx.working_bits();
    std::vector<Task> tasks;
    for (long k = 1; k <= 3; ++k) {
        tasks.push_back([k, &ctx, bits] {
            std::vector<IdentityReport> out;
            for (const char* s : {"1.5", "2", "3"}) {
                Real x = Real::parse(s, bits);
                out.push_back(single(with_param("continuation_vs_series", "k=" + std::to_string(k)), x,
                                     zeta_A_continued(k, x, 3, ctx).value, zeta_A_series(k, x, ctx).value, 15, ctx));
            }
            for (long m = 1; m <= 2; ++m) {
                Real x(-2 * m, bits);
                out.push_back(single(with_param("continuation_neg_even", "k=" + std::to_string(k)), x,
                                     zeta_A_continued(k, x, static_cast<int>(2 * m + 2), ctx).value,
                                     Real(zeta_A_neg_even(k, m), bits), 10, ctx));
            }
            const Real h = Real::parse("1e-3", bits);
            Real up = zeta_A_continued(k, h + 1L, 3, ctx).value;
            Real down = zeta_A_continued(k, 1L - h, 3, ctx).value;
            out.push_back(single(with_param("pole_head_order2", "k=" + std::to_string(k)), h,
                                 h * h * (up + down) / 2L, Real(Rational(1, k), bits), 5, ctx));
            out.push_back(single(with_param("pole_head_order1", "k=" + std::to_string(k)), h, (up - down) * h / 2L,
                                 euler_gamma(ctx) / k, 5, ctx));
            for (int m = 0; m <= 1; ++m)
                out.push_back(single(with_param("limit_oracle", "k=" + std::to_string(k)), Real(m, bits),
                                     gamma_A_limit(k, m, 1000000, ctx), gamma_A(k, m, ctx).value, 2, ctx));
            return out;
        });
    }
    tasks.push_back([&ctx, bits] {
        std::vector<IdentityReport> out;
        const int th = std::max(15, ctx.target_digits - 10);
        for (int v = 0; v <= 3; ++v) {
            out.push_back(single("eta_H_alternating", Real(v, bits), eta_H_direct_deriv(v, 1000, ctx).value,
                                 eta_H_deriv(v, ctx).value, th, ctx));
            out.push_back(single("eta_Hminus_alternating", Real(v, bits), eta_Hminus_direct_deriv(v, 1000, ctx).value,
                                 eta_Hminus_deriv(v, ctx).value, th, ctx));
        }
        return out;
    });
    tasks.push_back([&ctx, bits] {
        std::vector<IdentityReport> out;
        const Real pi2 = Real::pi(bits) * Real::pi(bits);
        const Real l2 = Real::ln2(bits);
        const int th = ctx.target_digits - 5;
        out.push_back(single("K0_closed", Real(0L, bits), integral_k_alt(0, ctx).value, pi2 / 12L - l2 * l2 / 2L, th, ctx));
        out.push_back(single("J0_closed", Real(0L, bits), integral_j(0, ctx).value, -(pi2 / 12L + l2 * l2 / 2L), th, ctx));
        const Real g = euler_gamma(ctx);
        out.push_back(single("gamma_H0_closed", Real(0L, bits), gamma_H(0, ctx).value,
                             (zeta_real(Real(2L, bits), ctx) + g * g) / 2L, th, ctx));
        return out;
    });
    tasks.push_back([&ctx, bits] {
        std::vector<IdentityReport> out;
        for (int m = 0; m <= 10; ++m) {
            Estimate a = gamma_H_half(m, ctx, HalfMethod::A);
            Estimate b = gamma_H_half(m, ctx, HalfMethod::B);
            out.push_back(single("gamma_H_half_methods", Real(m, bits), a.value, b.value, ctx.target_digits - 8, ctx));
        }
        return out;
    });
    return run_tasks(tasks, exec);
}

}  // namespace hzeta
