#pragma once

#include <vector>

#include "hzeta/estimate.hpp"
#include "hzeta/real.hpp"

namespace hzeta {

// Endpoint correction for f(x) = x^(-sigma) P(log x), P given by its
// coefficients in powers of log x:
//   f(W)/2 - sum_{j>=1} B_2j/(2j)! f^(2j-1)(W).
// Terms are added until they drop below tol * max(|f(W)|, |sum|).
// Throws NonConvergence if the asymptotic series turns before that.
Estimate em_endpoint(const Real& sigma, const Real& W, std::vector<Real> poly, const Real& tol);

// Z_r = sum_{n>=0} (-log(W+n))^r (W+n)^(-sigma) for r = 0..R, continued
// analytically in sigma (sigma != 1). Uses the closed-form integral
// d^r/dsigma^r [W^(1-sigma)/(sigma-1)] plus em_endpoint.
std::vector<Estimate> hurwitz_tail(const Real& sigma, const Real& W, int R, const Real& tol);

}  // namespace hzeta
