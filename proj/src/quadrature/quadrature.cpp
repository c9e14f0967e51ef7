#include "hzeta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "hzeta/error.hpp"

namespace hzeta {

namespace {

struct Node {
    Real x;
    Real w;
};

using Map = std::function<Node(const Real& t)>;

// Smallest T > 0 on a 1/16 grid with g(T) < target, g decreasing eventually.
double solve_edge(const std::function<double(double)>& g, double target) {
    for (double T = 0.5; T < 12.0; T += 1.0 / 16) {
        if (g(T) < target) return T;
    }
    return 12.0;
}

std::vector<IntegralResult> integrate_piece(const VectorIntegrand& f, int components, const Map& map, double t_lo,
                                            double t_hi, const QuadratureSpec& spec, long bits, Exec exec) {
    const size_t nc = static_cast<size_t>(components);
    std::vector<Real> raw(nc, Real(0L, bits));
    std::vector<Real> absraw(nc, Real(0L, bits));
    std::vector<Real> prev(nc), cur(nc);
    const Real one(1L, bits);
    long evaluations = 0;

    for (int level = 0; level <= spec.max_level; ++level) {
        // level 0: all integer multiples of h0 = 1; later levels: odd multiples of h
        const long denom = 1L << level;
        std::vector<long> js;
        long jlo = static_cast<long>(std::ceil(t_lo * denom));
        long jhi = static_cast<long>(std::floor(t_hi * denom));
        for (long j = jlo; j <= jhi; ++j) {
            if (level > 0 && (j % 2 == 0)) continue;
            js.push_back(j);
        }
        std::vector<std::vector<Real>> vals(js.size());
        std::exception_ptr failure;
        auto eval = [&](size_t i) {
            try {
                Real t = ldexp(Real(js[i], bits), -level);
                Node nd = map(t);
                std::vector<Real> out(nc, Real(0L, bits));
                if (nd.w.is_zero()) {
                    vals[i] = std::move(out);
                    return;
                }
                f(nd.x, out);
                for (auto& o : out) o *= nd.w;
                vals[i] = std::move(out);
            } catch (...) {
#pragma omp critical(hzeta_quad_failure)
                if (!failure) failure = std::current_exception();
            }
        };
        const long n = static_cast<long>(js.size());
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
            for (long i = 0; i < n; ++i) eval(static_cast<size_t>(i));
        } else {
            for (long i = 0; i < n; ++i) eval(static_cast<size_t>(i));
        }
        if (failure) std::rethrow_exception(failure);
        evaluations += n;
        // fixed-order reduction keeps results independent of scheduling
        for (size_t i = 0; i < vals.size(); ++i)
            for (size_t c = 0; c < nc; ++c) {
                if (!vals[i][c].is_finite()) throw NonConvergence("integrand not finite at a quadrature node");
                raw[c] += vals[i][c];
                absraw[c] += abs(vals[i][c]);
            }
        const Real h = ldexp(one, -level);
        bool done = level >= 3;
        for (size_t c = 0; c < nc; ++c) {
            cur[c] = raw[c] * h;
            if (level == 0) {
                done = false;
                continue;
            }
            Real diff = abs(cur[c] - prev[c]);
            if (diff > spec.tol * max(one, abs(cur[c]))) done = false;
        }
        if (done) {
            std::vector<IntegralResult> out;
            for (size_t c = 0; c < nc; ++c) {
                Real diff = abs(cur[c] - prev[c]);
                Real rounding = ldexp(absraw[c] * h, 8 - bits);
                out.push_back({cur[c], diff + rounding, level});
            }
            return out;
        }
        prev = cur;
    }
    throw NonConvergence("double-exponential quadrature did not converge by level " + std::to_string(spec.max_level) +
                         " (" + std::to_string(evaluations) + " evaluations)");
}

}  // namespace

QuadratureSpec make_spec(const PrecisionCtx& ctx, double decay, int log_power) {
    const long bits = ctx.working_bits();
    QuadratureSpec spec;
    spec.split_point = Real(1L, bits);
    spec.max_level = 12;
    spec.tol = ctx.eps();
    double X = ctx.working_digits() * std::log(10.0) / decay + 10.0 * (log_power + 1);
    spec.upper_cutoff = Real(X, bits);
    spec.log_power = log_power;
    return spec;
}

std::vector<IntegralResult> integrate_de(const VectorIntegrand& f, int components, const QuadratureSpec& spec,
                                         long bits, Exec exec) {
    if (components < 1) throw DomainError("integrand needs at least one component");
    if (!(spec.tol > 0L)) throw DomainError("quadrature tolerance must be positive");
    if (!(spec.upper_cutoff > spec.split_point)) throw DomainError("upper cutoff must exceed the split point");
    const double ln_tol = spec.tol.log10_abs() * std::log(10.0) - 8.0;
    const double m = spec.log_power;
    const double pi = 3.141592653589793;
    const Real s = spec.split_point.at_prec(bits);
    const Real piR = Real::pi(bits);
    const Real half_pi = ldexp(piR, -1);
    const double s_d = s.to_double();

    // (0, s]: x = s / (1 + u), u = exp(-pi sinh t)
    Map left = [&](const Real& t) -> Node {
        Real u = exp(-(piR * sinh(t)));
        Real x = s / (1L + u);
        Real w = s * piR * cosh(t) * u / ((1L + u) * (1L + u));
        return {x, w};
    };
    auto g_left = [&](double T) {
        double a = pi * std::sinh(T);
        return std::log(pi * std::cosh(T) * s_d) - a + m * std::log(a + std::fabs(std::log(s_d)) + 2.0);
    };
    double T0 = solve_edge(g_left, ln_tol);
    auto left_res = integrate_piece(f, components, left, -T0, T0, spec, bits, exec);

    // [s, X]: x = s + exp(pi/2 sinh t)
    const Real X = spec.upper_cutoff.at_prec(bits);
    Map right = [&](const Real& t) -> Node {
        Real e = exp(half_pi * sinh(t));
        return {s + e, half_pi * cosh(t) * e};
    };
    const double lnX = std::log(X.to_double());
    auto g_right = [&](double T) {
        return std::log(pi / 2 * std::cosh(T)) - pi / 2 * std::sinh(T) + m * std::log(lnX + 2.0);
    };
    double T1 = solve_edge(g_right, ln_tol);
    double t_hi = std::asinh(2.0 / pi * std::log(X.to_double() - s_d));
    auto right_res = integrate_piece(f, components, right, -T1, t_hi, spec, bits, exec);

    std::vector<IntegralResult> out;
    for (int c = 0; c < components; ++c) {
        const auto& a = left_res[static_cast<size_t>(c)];
        const auto& b = right_res[static_cast<size_t>(c)];
        out.push_back({a.value + b.value, a.error_bound + b.error_bound, std::max(a.levels_used, b.levels_used)});
    }
    return out;
}

IntegralResult integrate_de(const ScalarIntegrand& f, const QuadratureSpec& spec, const PrecisionCtx& ctx, Exec exec) {
    VectorIntegrand vf = [&f](const Real& x, std::vector<Real>& out) { out[0] = f(x); };
    return integrate_de(vf, 1, spec, ctx.working_bits(), exec)[0];
}

VectorIntegrand log_moments(std::function<Real(const Real&)> phi, int M) {
    return [phi = std::move(phi), M](const Real& x, std::vector<Real>& out) {
        Real v = phi(x);
        Real L = log(x);
        for (int i = 0; i <= M; ++i) {
            out[static_cast<size_t>(i)] = v;
            v *= L;
        }
    };
}

}  // namespace hzeta
