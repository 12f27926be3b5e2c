#pragma once

#include "critline/core_math.hpp"

namespace critline {

// Partial evaluation of log(1/Gamma(s)) from the everywhere-convergent
// product over k of (1 + s/k) e^{-s/k}.
struct WeierstrassPartial {
    Complex value;         // log s + gamma s + sum_k [log(1+s/k) - s/k] + tail correction
    long terms_used;       // number of explicit product terms K
    double tail_estimate;  // bound on the absolute error left after the correction
};

// Euler-Mascheroni constant, correct to the last bit of a double.
double euler_gamma() noexcept;

// Branch of log Gamma(s) continuous on Re s > 0 (real on the positive axis),
// extended by the reflection formula for Re s < 1/2. exp(log_gamma(s))
// reproduces Gamma(s) to ~1e-13 relative for |s| <= 100.
// Throws pole_error at s in {0, -1, -2, ...}.
Complex log_gamma(Complex s);

// log(1/Gamma(s)) accumulated from the product, truncated at K terms with a
// closed-form integral-plus-trapezoid tail correction so that
// tail_estimate <= config.eps. Matches -log_gamma up to an exact multiple of
// 2 pi i; equal outright on Re s > 0 away from branch crossings.
// Throws pole_error at s = 0 and negative integers, convergence_error when
// config.k_max is reached before the tolerance.
WeierstrassPartial weierstrass_log_recip_gamma(Complex s, const SeriesConfig& config = {});

}  // namespace critline
