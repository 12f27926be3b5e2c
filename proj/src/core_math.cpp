#include "critline/core_math.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "critline/errors.hpp"

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// atan2 with the (-pi, pi] convention: a negative-zero imaginary part would
// otherwise land on -pi along the negative real axis.
double principal_arg(Complex z) {
    double im = z.imag() == 0.0 ? 0.0 : z.imag();
    return std::atan2(im, z.real());
}

}  // namespace

void validate(const SeriesConfig& cfg) {
    if (!(cfg.eps > 0.0) || cfg.eps > 1e-6 || !std::isfinite(cfg.eps))
        throw domain_error("SeriesConfig: eps must lie in (0, 1e-6]");
    if (cfg.k_max < 16)
        throw domain_error("SeriesConfig: k_max must be >= 16");
}

Complex complex_log(Complex z) {
    if (!is_finite(z)) throw domain_error("complex_log: non-finite input");
    if (z.real() == 0.0 && z.imag() == 0.0)
        throw domain_error("complex_log: log of zero");
    return {std::log(std::abs(z)), principal_arg(z)};
}

PolarDecomposition to_polar(Complex z) {
    if (!is_finite(z)) throw domain_error("to_polar: non-finite input");
    if (z.real() == 0.0 && z.imag() == 0.0) return {0.0, 0.0};
    return {std::abs(z), principal_arg(z)};
}

double normalize_mod(double angle, double modulus) {
    if (!(modulus > 0.0) || !std::isfinite(modulus))
        throw domain_error("normalize_mod: modulus must be positive and finite");
    if (!std::isfinite(angle)) throw domain_error("normalize_mod: non-finite angle");
    double r = std::fmod(angle, modulus);
    if (r < 0.0) r += modulus;
    // r + modulus can round up to modulus itself when r is a tiny negative
    if (r >= modulus) r -= modulus;
    return r == 0.0 ? 0.0 : r;
}

double circle_distance(double a, double b, double period) {
    double d = normalize_mod(a - b, period);
    return std::min(d, period - d);
}

void NeumaierSum::add(double term) {
    double t = sum_ + term;
    if (!std::isfinite(t)) {
        sum_ = t;  // overflow latches; the compensation is meaningless past here
        return;
    }
    if (std::abs(sum_) >= std::abs(term))
        comp_ += (sum_ - t) + term;
    else
        comp_ += (term - t) + sum_;
    sum_ = t;
}

double NeumaierSum::value() const {
    if (!std::isfinite(sum_)) return sum_;
    return sum_ + comp_;
}

bool NeumaierSum::overflowed() const { return !std::isfinite(sum_); }

double compensated_sum(std::span<const double> terms) {
    NeumaierSum acc;
    for (double x : terms) {
        if (!std::isfinite(x)) throw domain_error("compensated_sum: non-finite term");
        acc.add(x);
    }
    return acc.value();
}

std::vector<double> unwrap_phase(std::span<const double> angles) {
    if (angles.empty()) throw domain_error("unwrap_phase: empty input");
    for (double a : angles)
        if (!std::isfinite(a)) throw domain_error("unwrap_phase: non-finite angle");
    std::vector<double> out;
    out.reserve(angles.size());
    out.push_back(angles[0]);
    for (std::size_t i = 1; i < angles.size(); ++i) {
        double d = std::remainder(angles[i] - angles[i - 1], kTwoPi);
        out.push_back(out.back() + d);
    }
    return out;
}

namespace detail {

Complex log1p_complex(Complex w) {
    double wr = w.real(), wi = w.imag();
    // |1+w|^2 - 1 without forming 1+w first
    double m = 2.0 * wr + wr * wr + wi * wi;
    if (m < -0.5) {
        // near the singularity the three terms above cancel; 1 + wr is exact
        // here (Sterbenz), so the squared modulus is formed directly
        double a = 1.0 + wr;
        return {0.5 * std::log(a * a + wi * wi), std::atan2(wi, a)};
    }
    return {0.5 * std::log1p(m), std::atan2(wi, 1.0 + wr)};
}

Complex log_sin_pi(Complex z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}), |e^{2 pi i z}| <= 1 here
    Complex w = std::exp(Complex(0.0, kTwoPi) * z);
    return Complex(-std::numbers::ln2, 0.5 * kPi) - Complex(0.0, kPi) * z +
           log1p_complex(-w);
}

Complex log_cos(Complex w) {
    if (w.imag() < 0.0) return std::conj(log_cos(std::conj(w)));
    // cos(w) = (e^{-i w}/2)(1 + e^{2 i w}), |e^{2 i w}| <= 1 here
    Complex u = std::exp(Complex(0.0, 2.0) * w);
    return Complex(-std::numbers::ln2, 0.0) - Complex(0.0, 1.0) * w + log1p_complex(u);
}

}  // namespace detail

}  // namespace critline
