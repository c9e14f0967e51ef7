#pragma once

#include <string>
#include <vector>

#include "hzeta/precision.hpp"
#include "hzeta/quadrature.hpp"
#include "hzeta/real.hpp"

namespace hzeta {

struct IdentityPoint {
    Real s;
    Real lhs;
    Real rhs;
    int digits_agreement = 0;
};

struct IdentityReport {
    std::string identity_id;
    std::vector<IdentityPoint> points;
    int threshold = 0;  // required digits at every point
    bool pass = false;
};

// Significant digits to which a and b agree, relative to max(1, |b|), capped at `cap`.
int agreement_digits(const Real& a, const Real& b, int cap);

// A threshold of -1 means target_digits - 10.
IdentityReport check_raabe(long k, const Real& s, const PrecisionCtx& ctx, int threshold = -1);
IdentityReport check_half_shift(const Real& s, const PrecisionCtx& ctx, int threshold = -1);
IdentityReport check_s_half_split(const Real& s, const PrecisionCtx& ctx, int threshold = -1);
IdentityReport check_odd_zeta(const Real& s, const PrecisionCtx& ctx, int threshold = -1);
IdentityReport check_integer_relations(long m, char variant, const PrecisionCtx& ctx, int threshold = -1);
// Direct series against the integral representation at a positive integer
// (the integral term does not vanish there).
IdentityReport check_integral_repr_integer(long k, long n, const PrecisionCtx& ctx, int threshold = -1);
// zeta_O(2) = 7 zeta(3)/4 and S(2) = 7 zeta(3) - pi^2 log 2 from direct sums.
std::vector<IdentityReport> check_anchors(const PrecisionCtx& ctx, int threshold = -1);

// Partial sums of the Laurent coefficient series to N against their limits:
// sum d_n/n! = gamma - 1/2, sum gamma_O(n)/n! = (gamma-1)/2 + log 2 and the
// alternating pair. Passes when |partial - limit| + tail < 10^-6, the tail
// modelled as geometric with ratio 1/2.
std::vector<IdentityReport> check_sum_identities(int N, const PrecisionCtx& ctx);

// raabe_gamma_sum(2, n) = gamma_H(n, 1/2) + gamma_H(n) for n = 0..n_max.
IdentityReport check_raabe_gamma_closure(int n_max, const PrecisionCtx& ctx, int threshold = -1);

// Merges single-point reports with the same id.
std::vector<IdentityReport> merge_reports(const std::vector<IdentityReport>& reports);

// The default identity suite, checks evaluated concurrently and aggregated in a fixed order.
std::vector<IdentityReport> identity_suite(const PrecisionCtx& ctx, Exec exec = Exec::parallel);
// Oracle cross-checks of the closed-form layer.
std::vector<IdentityReport> oracle_suite(const PrecisionCtx& ctx, Exec exec = Exec::parallel);

}  // namespace hzeta
