#pragma once

#include <vector>

#include "critline/core_math.hpp"

namespace critline {

// A refined sign change of the Hardy Z function on the critical line.
struct ZeroRecord {
    double t;              // ordinate of zeta(1/2 + i t) = 0
    double bracket_width;  // final bisection bracket, <= 1e-9
    double z_residual;     // |Z(t)| at the reported ordinate
};

// zeta(s) through the accelerated alternating series for Re s >= 0 and the
// functional equation below; absolute error <= config.eps for Re s >= 0,
// |Im s| <= 120. Throws pole_error at s = 1 and convergence_error when the
// acceleration bound cannot reach eps within config.k_max terms.
Complex zeta(Complex s, const SeriesConfig& config = {});

// log of chi(s) = (2 pi)^s / (2 cos(pi s/2) Gamma(s)), the zeta-free form of
// zeta(s)/zeta(1-s). Imaginary part is not reduced. Throws at real integer
// points where a factor is singular; chi_factor below handles those.
Complex chi_log(Complex s);

// chi(s) itself. Poles (positive odd integers) throw pole_error; negative
// even integers and 0 return exactly 0 (the Gamma pole wins); negative odd
// integers return the finite 0 * inf limit.
Complex chi_factor(Complex s);

// Riemann-Siegel theta asymptotic
//   theta(t) = (t/2) ln(t/2pi) - t/2 - pi/8 + 1/(48 t) + 7/(5760 t^3),
// t >= 2. Truncation leaves ~4e-9 at t = 10, < 2e-10 from t = 20 up.
double rs_theta(double t);

// Hardy Z(t) = Re[e^{i theta(t)} zeta(1/2 + i t)], t >= 2. theta is taken
// from the log-gamma branch so the analytically-zero imaginary part stays
// below the 100 * config.eps self-check at every height.
double hardy_z(double t, const SeriesConfig& config = {});

// All sign changes of Z on [t_lo, t_hi], 2 <= t_lo < t_hi <= 120: scan step
// 0.05, bisection refinement to bracket_width <= 1e-9, ascending order. The
// series tolerance is tightened to min(config.eps, 1e-10) so z_residual
// stays below 1e-8 regardless of the caller's eps. When suspected_pairs is
// non-null it receives grid ordinates where |Z| dips under 1e-3 without a
// sign change (possible unresolved zero pair).
std::vector<ZeroRecord> find_zeros(double t_lo, double t_hi,
                                   const SeriesConfig& config = {},
                                   std::vector<double>* suspected_pairs = nullptr);

}  // namespace critline
