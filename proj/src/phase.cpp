#include "critline/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "critline/errors.hpp"
#include "critline/gamma.hpp"
#include "critline/zeta.hpp"

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kLn2Pi = 1.8378770664093454836;

// atan(a) - a without cancellation for small a.
double atan_minus_arg(double a) {
    if (std::abs(a) >= 0.25) return std::atan(a) - a;
    double a2 = a * a;
    double term = a * a2;  // a^3
    double sum = 0.0;
    for (int j = 0; j < 16; ++j) {
        double piece = term / (2.0 * j + 3.0);
        sum += (j % 2 == 0) ? -piece : piece;
        term *= a2;
        if (std::abs(term) < 1e-20) break;
    }
    return sum;
}

// Reduce an unreduced phase mod pi into (-pi/2, pi/2] and package the result.
PhaseResult package_phase(double raw, long terms, double tail) {
    double phi = std::remainder(raw, kPi);
    if (phi <= -kHalfPi) phi += kPi;
    double phi_mod = normalize_mod(phi, kHalfPi);
    long long m = std::llround((raw - phi_mod) / kHalfPi);
    return {phi, phi_mod, m, terms, tail};
}

// ln cosh(pi t), overflow-safe for any t.
double ln_cosh_pi(double t_abs) {
    return kPi * t_abs + std::log1p(std::exp(-2.0 * kPi * t_abs)) - std::numbers::ln2;
}

// Nearest Z-function zero ordinate within ~1.2 of t_abs, if any.
std::optional<double> nearest_zero_ordinate(double t_abs, const SeriesConfig& config) {
    double lo = std::max(2.0, t_abs - 1.2);
    double hi = std::min(120.0, t_abs + 1.2);
    if (!(hi > lo)) return std::nullopt;
    auto zeros = find_zeros(lo, hi, config);
    if (zeros.empty()) return std::nullopt;
    double best = zeros.front().t;
    for (const auto& z : zeros)
        if (std::abs(z.t - t_abs) < std::abs(best - t_abs)) best = z.t;
    return best;
}

}  // namespace

Complex chi_ratio(Complex s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw domain_error("chi_ratio: non-finite input");
    return chi_factor(s);  // poles at s = 1, 3, 5, ... rejected there
}

PhaseResult phase_from_chi(double t) {
    if (!std::isfinite(t)) throw domain_error("phase_from_chi: non-finite t");
    Complex log_chi = chi_log(Complex(0.5, t));
    double arg = std::remainder(log_chi.imag(), 2.0 * kPi);
    if (arg <= -kPi) arg += 2.0 * kPi;  // principal (-pi, pi]
    return package_phase(0.5 * arg, 0, 0.0);
}

PhaseResult phase_series(double t, const SeriesConfig& config) {
    validate(config);
    if (!std::isfinite(t) || std::abs(t) > 120.0)
        throw domain_error("phase_series: |t| <= 120 required");
    if (t == 0.0) return {0.0, 0.0, 0, 0, 0.0};  // every summand is odd in t

    const double ta = std::abs(t);

    // After the integral + trapezoid correction the residual on the half-sum
    // is ~(1/24)|f'(K)|; estimate at (1/12) for safety.
    auto tail_bound = [&](double k) {
        double u = k + 0.5;
        return (ta / (k * k) - ta / (u * u + ta * ta)) / 12.0;
    };

    long k_terms = std::max<long>(5000, 200 * static_cast<long>(std::ceil(ta)));
    k_terms = std::min(k_terms, config.k_max);
    while (tail_bound(static_cast<double>(k_terms)) > config.eps) {
        if (k_terms >= config.k_max)
            throw convergence_error("phase_series: k_max reached before tolerance");
        k_terms = std::min(config.k_max, 2 * k_terms);
    }

    NeumaierSum sum;
    for (long k = 1; k <= k_terms; ++k) {
        double kk = static_cast<double>(k);
        double u = kk + 0.5;
        double a = ta / u;
        // f(k) = atan(t/(k+1/2)) - t/k = [atan(a) - a] - t/(2k(k+1/2))
        sum.add(atan_minus_arg(a) - ta / (2.0 * kk * u));
    }

    double kd = static_cast<double>(k_terms);
    double u = kd + 0.5;
    double a = ta / u;
    double f_last = atan_minus_arg(a) - ta / (2.0 * kd * u);
    // int_K^inf f dx = [t - (K+1/2) atan a] - t ln((K+1/2)/K) - (t/2) ln(1+a^2)
    double integral = -u * atan_minus_arg(a) - ta * std::log1p(0.5 / kd) -
                      0.5 * ta * std::log1p(a * a);

    double head = 0.5 * ta * (euler_gamma() + kLn2Pi) + 0.5 * std::atan(2.0 * ta) +
                  0.5 * std::atan(std::tanh(kHalfPi * ta));
    double raw = head + 0.5 * (sum.value() + integral - 0.5 * f_last);
    double tail = tail_bound(kd);

    PhaseResult result = package_phase(raw, k_terms, tail);
    if (t < 0.0) {
        result.phi = -result.phi;
        result.phi_mod = normalize_mod(result.phi, kHalfPi);
        result.branch_m = std::llround((-raw - result.phi_mod) / kHalfPi);
    }
    return result;
}

double identity_residual(double t, const SeriesConfig& config) {
    validate(config);
    if (!std::isfinite(t) || std::abs(t) > 120.0)
        throw domain_error("identity_residual: |t| <= 120 required");

    const double ta = std::abs(t);
    const double t2 = ta * ta;

    auto tail_bound = [&](double k) {
        double u = k + 0.5;
        return (0.5 / (k * k * u) + 2.0 * t2 / (u * (u * u + t2))) / 6.0;
    };

    long k_terms = std::max<long>(5000, 200 * static_cast<long>(std::ceil(ta)));
    k_terms = std::min(k_terms, config.k_max);
    while (tail_bound(static_cast<double>(k_terms)) > config.eps) {
        if (k_terms >= config.k_max)
            throw convergence_error("identity_residual: k_max reached before tolerance");
        k_terms = std::min(config.k_max, 2 * k_terms);
    }

    NeumaierSum sum;
    for (long k = 1; k <= k_terms; ++k) {
        double kk = static_cast<double>(k);
        // g(k) = ln(1 + 1/k + 1/(4k^2) + t^2/k^2) - 1/k
        double w = (1.0 + 0.25 / kk + t2 / kk) / kk;
        sum.add(std::log1p(w) - 1.0 / kk);
    }

    double kd = static_cast<double>(k_terms);
    double u = kd + 0.5;
    double a = ta / u;
    double g_last = std::log1p((1.0 + 0.25 / kd + t2 / kd) / kd) - 1.0 / kd;
    // int_K^inf g dx = [1 - (2K+1) ln(1 + 1/(2K))] + 2t atan(t/(K+1/2))
    //                - (K+1/2) ln(1 + t^2/(K+1/2)^2)
    double integral = 1.0 - (2.0 * kd + 1.0) * std::log1p(0.5 / kd) +
                      2.0 * ta * std::atan(a) - u * std::log1p(a * a);

    double head = euler_gamma() + std::log(0.25 * kPi) + std::log1p(4.0 * t2) -
                  ln_cosh_pi(ta);
    return head + sum.value() + integral - 0.5 * g_last;
}

RatioSample conjugate_ratio(double sigma, double t, const SeriesConfig& config) {
    validate(config);
    if (!std::isfinite(sigma) || !std::isfinite(t))
        throw domain_error("conjugate_ratio: non-finite input");

    constexpr double kRefusalRadius = 1e-3;
    if (auto ordinate = nearest_zero_ordinate(std::abs(t), config)) {
        double dist = std::abs(std::abs(t) - *ordinate);
        if (dist < kRefusalRadius)
            throw near_zero_error(
                "conjugate_ratio: point within the near-zero refusal radius of "
                "ordinate " + std::to_string(*ordinate),
                *ordinate, dist);
    }

    Complex s(sigma, t);
    Complex numer = zeta(s, config);
    Complex denom = zeta(1.0 - s, config);
    if (std::abs(denom) < 1e-9) {
        double ordinate = nearest_zero_ordinate(std::abs(t), config).value_or(std::abs(t));
        throw near_zero_error(
            "conjugate_ratio: denominator within 1e-9 of zero near ordinate " +
                std::to_string(ordinate),
            ordinate, std::abs(std::abs(t) - ordinate));
    }
    Complex ratio = numer / denom;
    return {s, ratio, std::abs(std::abs(ratio) - 1.0)};
}

std::vector<RatioSample> offline_deviation_scan(double t, std::span<const double> sigmas,
                                                const SeriesConfig& config) {
    if (!(t >= 2.0)) throw domain_error("offline_deviation_scan: t must be >= 2");
    for (double sg : sigmas)
        if (!(sg > 0.0 && sg < 1.0))
            throw domain_error("offline_deviation_scan: sigma must lie in (0, 1)");
    std::vector<RatioSample> out;
    out.reserve(sigmas.size());
    for (double sg : sigmas) out.push_back(conjugate_ratio(sg, t, config));
    return out;
}

}  // namespace critline
