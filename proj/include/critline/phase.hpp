#pragma once

#include <span>
#include <vector>

#include "critline/core_math.hpp"

namespace critline {

// Critical-line limit phase in both of its reported representations.
struct PhaseResult {
    double phi;            // principal value in (-pi/2, pi/2]
    double phi_mod;        // normalize_mod(phi, pi/2), in [0, pi/2)
    long long branch_m;    // quarter turns removed: unreduced ~ phi_mod + m pi/2
    long terms_used;       // series terms (0 on the closed-form route)
    double tail_estimate;  // truncation bound (0 on the closed-form route)
};

// One evaluation of zeta(s) against the reflected point 1-s. On the critical
// line 1-s is exactly the conjugate of s, so |ratio| = 1 there; off the line
// the modulus drifts away from 1.
struct RatioSample {
    Complex s;                 // sigma + i t
    Complex ratio;             // zeta(s) / zeta(1-s)
    double modulus_deviation;  // | |ratio| - 1 |
};

// chi(s) with the precondition checks of the public surface; delegates to
// the single chi implementation in the zeta module.
Complex chi_ratio(Complex s);

// phi0 = (1/2) arg chi(1/2 + i t), closed form; tail_estimate = 0.
PhaseResult phase_from_chi(double t);

// Series route for the same phase:
//   phi0 + pi M/2 = (t/2)(gamma + ln 2pi) + atan(2t)/2 - atan(-tanh(pi t/2))/2
//                 + (1/2) sum_k [-t/k + atan(t/(k+1/2))]
// truncated at K terms with the closed-form integral + trapezoid tail
// correction, |t| <= 120. Negative t is computed at |t| and sign-flipped, so
// phase_series(-t).phi == -phase_series(t).phi exactly.
PhaseResult phase_series(double t, const SeriesConfig& config = {});

// Residual of the real-part identity
//   R(t) = gamma + ln(pi/4) - [ln cosh(pi t) - ln(1 + 4 t^2)]
//        + sum_k ln[e^{-1/k} (1 + 1/k + 1/(4k^2) + t^2/k^2)],
// analytically zero for every t; |t| <= 120. ln cosh goes through the
// overflow-safe pi|t| + ln((1 + e^{-2 pi|t|})/2) form. R(-t) == R(t) exactly.
double identity_residual(double t, const SeriesConfig& config = {});

// zeta(sigma+it) / zeta(1-sigma-it) via two independent zeta evaluations.
// Refuses (near_zero_error) within 1e-3 in ordinate distance of a zero, where
// the on-line quotient degenerates to 0/0, and whenever |denominator| < 1e-9.
RatioSample conjugate_ratio(double sigma, double t, const SeriesConfig& config = {});

// conjugate_ratio across sigmas at fixed t >= 2, each sigma in (0, 1);
// results in input order.
std::vector<RatioSample> offline_deviation_scan(double t, std::span<const double> sigmas,
                                                const SeriesConfig& config = {});

}  // namespace critline
