#include "critline/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "critline/errors.hpp"
#include "critline/gamma.hpp"

namespace critline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kLn2Pi = 1.8378770664093454836;   // ln(2 pi)
constexpr double kLnAccel = 1.7627471740390860504; // ln(3 + sqrt(8))

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Term count for the Chebyshev-weighted alternating series from the
// published bound ~3 (1 + 2|t|) e^{pi|t|/2} (3+sqrt 8)^{-n}; target is the
// absolute error on zeta, so the eta bound is divided by |1 - 2^{1-s}|.
// Below Re s = 1/2 the bound is only heuristic, hence the extra terms.
long accel_terms(Complex s, double eps, double denom_mod) {
    double t = std::abs(s.imag());
    double need = std::log(3.0 * (1.0 + 2.0 * t)) + 0.5 * kPi * t -
                  std::log(eps * denom_mod);
    long n = static_cast<long>(std::ceil(need / kLnAccel)) + 4;
    if (s.real() < 0.5) n += 8 + static_cast<long>(std::ceil(t / 4.0));
    return std::max<long>(n, 16);
}

// sum_{k=0}^{n-1} (-1)^k (1 - d_k/d_n) (-ln(k+1))^m / (k+1)^s.
// m = 0 gives the accelerated eta(s); m >= 1 its m-th derivative, used only
// on the removable-denominator path.
Complex weighted_eta_derivative(Complex s, int m, long n) {
    std::vector<double> d(static_cast<std::size_t>(n) + 1);
    double e = 1.0 / static_cast<double>(n);  // e_0 = (n-1)! / n!
    double run = e;
    d[0] = static_cast<double>(n) * run;
    for (long j = 0; j < n; ++j) {
        double jj = static_cast<double>(j);
        double nn = static_cast<double>(n);
        e *= 2.0 * (nn + jj) * (nn - jj) / ((2.0 * jj + 1.0) * (jj + 1.0));
        run += e;
        d[static_cast<std::size_t>(j) + 1] = nn * run;
    }
    const double dn = d[static_cast<std::size_t>(n)];

    NeumaierSum re, im;
    for (long k = 0; k < n; ++k) {
        double coeff = 1.0 - d[static_cast<std::size_t>(k)] / dn;
        double lk = std::log(static_cast<double>(k) + 1.0);
        Complex term = std::exp(-s * lk) * coeff;
        for (int i = 0; i < m; ++i) term *= -lk;
        if (k & 1) term = -term;
        re.add(term.real());
        im.add(term.imag());
    }
    return {re.value(), im.value()};
}

long checked_terms(Complex s, double eps, double denom_mod, const SeriesConfig& config) {
    long n = accel_terms(s, eps, denom_mod);
    // the weights grow like (3+sqrt 8)^n; past ~380 they leave double range
    if (n > config.k_max || n > 380)
        throw convergence_error("zeta: acceleration bound cannot reach eps within k_max");
    return n;
}

// Ratio-of-Taylor path inside |1 - 2^{1-s}| < 1e-3 of s* = 1 + 2 pi i q/ln 2,
// where the eta denominator vanishes:
//   zeta(s* + d) = [sum_m eta^(m)(s*) d^m/m!] / (d ln2) * T(d ln2),
//   T(a) = a/(1 - e^{-a}) = 1 + a/2 + a^2/12 - a^4/720 + ...
// For q != 0, eta(s*) = 0 analytically and the m = 0 term is dropped rather
// than divided as roundoff/d. For q = 0 the genuine pole shows up as 1/d.
Complex zeta_near_eta_zero(Complex s, const SeriesConfig& config) {
    long q = std::llround(s.imag() * kLn2 / (2.0 * kPi));
    Complex s_star(1.0, 2.0 * kPi * static_cast<double>(q) / kLn2);
    Complex delta = s - s_star;

    long n = checked_terms(s_star, 0.25 * config.eps, 1.0, config) + 30;
    if (n > 380) n = 380;

    if (delta.real() == 0.0 && delta.imag() == 0.0) {
        // exactly on the removable point: zeta = eta'(s*)/ln 2 (q != 0 only;
        // q = 0 is s = 1, rejected by the caller)
        return weighted_eta_derivative(s_star, 1, n) / kLn2;
    }

    Complex numer(0.0, 0.0);
    Complex dpow(1.0, 0.0);
    double fact = 1.0;
    for (int m = 0; m <= 6; ++m) {
        if (m > 0) {
            fact *= m;
            dpow *= delta;
        }
        if (m == 0 && q != 0) continue;
        numer += weighted_eta_derivative(s_star, m, n) * dpow / fact;
    }
    Complex a = delta * kLn2;
    Complex a2 = a * a;
    Complex todd = 1.0 + 0.5 * a + a2 / 12.0 - a2 * a2 / 720.0;
    return numer / (delta * kLn2) * todd;
}

}  // namespace

Complex zeta(Complex s, const SeriesConfig& config) {
    validate(config);
    if (!is_finite(s)) throw domain_error("zeta: non-finite input");
    if (s.real() == 1.0 && s.imag() == 0.0) throw pole_error("zeta: pole at s = 1");

    if (s.real() < 0.0) {
        // functional equation; Re(1-s) > 1 keeps the recursion one level deep
        Complex chi = chi_factor(s);
        if (chi.real() == 0.0 && chi.imag() == 0.0) return {0.0, 0.0};  // trivial zero
        // |chi| scales the reflected error, so tighten the sub-call budget
        SeriesConfig scaled = config;
        scaled.eps = std::min(config.eps, 0.5 * config.eps / std::abs(chi));
        return chi * zeta(1.0 - s, scaled);
    }

    Complex w = 1.0 - std::exp((1.0 - s) * kLn2);  // 1 - 2^{1-s}
    if (std::abs(w) < 1e-3) return zeta_near_eta_zero(s, config);

    long n = checked_terms(s, 0.5 * config.eps, std::abs(w), config);
    return weighted_eta_derivative(s, 0, n) / w;
}

Complex chi_log(Complex s) {
    return s * kLn2Pi - Complex(kLn2, 0.0) - detail::log_cos(0.5 * kPi * s) - log_gamma(s);
}

Complex chi_factor(Complex s) {
    if (!is_finite(s)) throw domain_error("chi_factor: non-finite input");
    if (s.imag() == 0.0 && s.real() == std::floor(s.real())) {
        double r = s.real();
        if (r > 0.0 && std::fmod(r, 2.0) == 1.0)
            throw pole_error("chi_factor: pole at positive odd integer");
        if (r <= 0.0) {
            long n = static_cast<long>(-r);
            if (n % 2 == 0) return {0.0, 0.0};  // uncancelled Gamma pole: chi = 0
            // 0 * inf limit at s = -(2j+1): chi = -(-1)^j n! / (pi (2 pi)^n)
            long j = (n - 1) / 2;
            double mag = std::exp(std::lgamma(static_cast<double>(n) + 1.0) -
                                  static_cast<double>(n) * kLn2Pi - std::log(kPi));
            return {(j % 2 == 0) ? -mag : mag, 0.0};
        }
    }
    return std::exp(chi_log(s));
}

double rs_theta(double t) {
    if (!(t >= 2.0)) throw domain_error("rs_theta: t must be >= 2");
    double h = 0.5 * t;
    return h * std::log(t / (2.0 * kPi)) - h - kPi / 8.0 + 1.0 / (48.0 * t) +
           7.0 / (5760.0 * t * t * t);
}

double hardy_z(double t, const SeriesConfig& config) {
    if (!(t >= 2.0)) throw domain_error("hardy_z: t must be >= 2");
    validate(config);
    // exact theta from the continuous log-gamma branch; the asymptotic
    // rs_theta would leak its truncation error into the reality check below
    double theta = log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
    Complex rotated = std::exp(Complex(0.0, theta)) * zeta(Complex(0.5, t), config);
    if (std::abs(rotated.imag()) > 100.0 * config.eps)
        throw convergence_error("hardy_z: rotated value failed the reality self-check");
    return rotated.real();
}

std::vector<ZeroRecord> find_zeros(double t_lo, double t_hi, const SeriesConfig& config,
                                   std::vector<double>* suspected_pairs) {
    if (!(t_lo >= 2.0) || !(t_hi > t_lo) || !(t_hi <= 120.0))
        throw domain_error("find_zeros: need 2 <= t_lo < t_hi <= 120");
    validate(config);
    SeriesConfig cfg = config;
    cfg.eps = std::min(cfg.eps, 1e-10);

    constexpr double kStep = 0.05;
    long nstep = static_cast<long>(std::ceil((t_hi - t_lo) / kStep - 1e-12));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(nstep) + 1);
    for (long i = 0; i <= nstep; ++i)
        grid.push_back(std::min(t_lo + static_cast<double>(i) * kStep, t_hi));

    std::vector<double> z(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) z[i] = hardy_z(grid[i], cfg);

    std::vector<ZeroRecord> out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (z[i] == 0.0) {
            out.push_back({grid[i], 0.0, 0.0});
            continue;
        }
        if (i + 1 >= grid.size() || !(z[i] * z[i + 1] < 0.0)) continue;

        double lo = grid[i], hi = grid[i + 1];
        double z_lo = z[i];
        while (hi - lo > 1e-9) {
            double mid = 0.5 * (lo + hi);
            double zm = hardy_z(mid, cfg);
            if (zm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((zm < 0.0) == (z_lo < 0.0)) {
                lo = mid;
                z_lo = zm;
            } else {
                hi = mid;
            }
        }
        double t_root = 0.5 * (lo + hi);
        out.push_back({t_root, hi - lo, std::abs(hardy_z(t_root, cfg))});
    }

    if (suspected_pairs) {
        for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
            bool change_left = z[i - 1] * z[i] < 0.0;
            bool change_right = z[i] * z[i + 1] < 0.0;
            if (!change_left && !change_right && std::abs(z[i]) < 1e-3 &&
                std::abs(z[i]) <= std::abs(z[i - 1]) && std::abs(z[i]) <= std::abs(z[i + 1]))
                suspected_pairs->push_back(grid[i]);
        }
    }
    return out;
}

}  // namespace critline
