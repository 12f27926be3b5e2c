#include "critline/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "critline/errors.hpp"

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2Pi = 1.8378770664093454836;  // ln(2 pi)
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool is_nonpositive_integer(Complex s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// Stirling series, adequate to ~1e-15 relative for Re w >= 12.
Complex stirling_log_gamma(Complex w) {
    // B_{2j} / (2j (2j-1)), j = 1..8
    static constexpr double c[] = {
        1.0 / 12.0,     -1.0 / 360.0,     1.0 / 1260.0, -1.0 / 1680.0,
        1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
    };
    Complex rz = 1.0 / w;
    Complex rz2 = rz * rz;
    Complex p = c[7];
    for (int j = 6; j >= 0; --j) p = p * rz2 + c[j];
    return (w - 0.5) * std::log(w) - w + Complex(0.5 * kLn2Pi, 0.0) + p * rz;
}

}  // namespace

double euler_gamma() noexcept { return kEulerGamma; }

Complex log_gamma(Complex s) {
    if (!is_finite(s)) throw domain_error("log_gamma: non-finite input");
    if (is_nonpositive_integer(s))
        throw pole_error("log_gamma: pole at nonpositive integer");
    if (s.real() < 0.5) {
        // log Gamma(s) = log pi - log sin(pi s) - log Gamma(1 - s)
        return Complex(std::log(kPi), 0.0) - detail::log_sin_pi(s) - log_gamma(1.0 - s);
    }
    // push the argument up to where Stirling holds, pull back with principal
    // logs; every shifted point stays in the right half-plane, so the branch
    // is the continuous one
    constexpr double kShift = 12.0;
    Complex z = s;
    Complex pulled(0.0, 0.0);
    while (z.real() < kShift) {
        pulled += std::log(z);
        z += 1.0;
    }
    return stirling_log_gamma(z) - pulled;
}

WeierstrassPartial weierstrass_log_recip_gamma(Complex s, const SeriesConfig& config) {
    validate(config);
    if (!is_finite(s)) throw domain_error("weierstrass_log_recip_gamma: non-finite input");
    if (s.real() == 0.0 && s.imag() == 0.0)
        throw pole_error("weierstrass_log_recip_gamma: s = 0");
    if (is_nonpositive_integer(s))
        throw pole_error("weierstrass_log_recip_gamma: product term vanishes at negative integer");

    const double mod_s = std::abs(s);

    // Residual after the integral + trapezoid correction is ~(1/12)|f'(K)|
    // with f'(k) = s^2 / (k^2 (k+s)); doubled for safety.
    auto tail_bound = [&](double k) {
        return mod_s * mod_s / (6.0 * k * k * std::abs(Complex(k, 0.0) + s));
    };

    long k_terms = std::max<long>(64, static_cast<long>(std::ceil(4.0 * mod_s)));
    while (tail_bound(static_cast<double>(k_terms)) > config.eps) {
        if (k_terms >= config.k_max)
            throw convergence_error(
                "weierstrass_log_recip_gamma: k_max reached before tolerance");
        k_terms = std::min(config.k_max, 2 * k_terms);
    }

    NeumaierSum re, im;
    for (long k = 1; k <= k_terms; ++k) {
        double kk = static_cast<double>(k);
        Complex term = detail::log1p_complex(s / kk) - s / kk;
        re.add(term.real());
        im.add(term.imag());
    }

    // Tail of sum_{k>K} f(k): closed-form integral minus half the last term,
    //   int_K^inf f dx = s - (K+s) log(1 + s/K)
    double kd = static_cast<double>(k_terms);
    Complex log_ratio = detail::log1p_complex(s / kd);
    Complex integral = s - (Complex(kd, 0.0) + s) * log_ratio;
    Complex f_last = log_ratio - s / kd;

    Complex value = complex_log(s) + kEulerGamma * s + Complex(re.value(), im.value()) +
                    integral - 0.5 * f_last;
    return {value, k_terms, tail_bound(kd)};
}

}  // namespace critline
