#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "critline/core_math.hpp"
#include "critline/zeta.hpp"

namespace oracle {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

Complex pow_int(double base, Complex expo) { return std::exp(expo * std::log(base)); }

// asymptotic digamma with argument shift to Re z >= 10
Complex digamma(Complex z) {
    Complex shift(0.0, 0.0);
    while (z.real() < 10.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ ln z - 1/(2z) - sum B_{2j}/(2j z^{2j})
    static const double c[] = {1.0 / 12.0,  -1.0 / 120.0,      1.0 / 252.0,
                               -1.0 / 240.0, 1.0 / 132.0,      -691.0 / 32760.0};
    Complex r2 = 1.0 / (z * z);
    Complex p(0.0, 0.0);
    for (int j = 5; j >= 0; --j) p = p * r2 + c[j];
    return shift + std::log(z) - 0.5 / z - p * r2;
}

double theta_derivative(double u) {
    return 0.5 * digamma(Complex(0.25, 0.5 * u)).real() - 0.5 * std::log(kPi);
}

}  // namespace

std::complex<double> zeta_euler_maclaurin(std::complex<double> s, int n_direct) {
    static const double B[] = {1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0,
                               -1.0 / 30.0, 5.0 / 66.0,  -691.0 / 2730.0};
    critline::NeumaierSum re, im;
    for (int k = 1; k <= n_direct; ++k) {
        Complex term = pow_int(static_cast<double>(k), -s);
        re.add(term.real());
        im.add(term.imag());
    }
    double nd = n_direct;
    Complex total(re.value(), im.value());
    total += pow_int(nd, 1.0 - s) / (s - 1.0);
    total -= 0.5 * pow_int(nd, -s);
    Complex poch = s;
    Complex npow = pow_int(nd, -(s + 1.0));
    double fact = 2.0;  // (2k)!
    for (int k = 1; k <= 6; ++k) {
        total += B[k - 1] / fact * poch * npow;
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        npow /= nd * nd;
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return total;
}

double euler_gamma_acceleration(int n) {
    critline::NeumaierSum h;
    for (int k = 1; k <= n; ++k) h.add(1.0 / k);
    double nd = n;
    return h.value() - std::log(nd) - 0.5 / nd + 1.0 / (12.0 * nd * nd) -
           1.0 / (120.0 * nd * nd * nd * nd) +
           1.0 / (252.0 * nd * nd * nd * nd * nd * nd);
}

double harmonic_minus_log(int n) {
    critline::NeumaierSum h;
    for (int k = 1; k <= n; ++k) h.add(1.0 / k);
    return h.value() - std::log(static_cast<double>(n));
}

double theta_quadrature(double t) {
    long panels = 2 * static_cast<long>(std::ceil(t * 256.0));
    if (panels < 2) panels = 2;
    double h = t / static_cast<double>(panels);
    critline::NeumaierSum acc;
    acc.add(theta_derivative(0.0));
    acc.add(theta_derivative(t));
    for (long i = 1; i < panels; ++i)
        acc.add((i % 2 == 1 ? 4.0 : 2.0) * theta_derivative(static_cast<double>(i) * h));
    return acc.value() * h / 3.0;
}

int zero_count_argument_principle(double re_lo, double re_hi, double im_lo, double im_hi) {
    critline::SeriesConfig cfg;
    auto f = [&](Complex s) { return critline::zeta(s, cfg); };

    double total = 0.0;
    // recursive subdivision keeps every argument step well under pi
    auto walk = [&](auto&& self, Complex s0, Complex s1, Complex f0, Complex f1,
                    int depth) -> void {
        double d = std::remainder(std::arg(f1) - std::arg(f0), 2.0 * kPi);
        if ((std::abs(d) < 0.8 && depth >= 4) || depth > 28) {
            total += d;
            return;
        }
        Complex sm = 0.5 * (s0 + s1);
        Complex fm = f(sm);
        self(self, s0, sm, f0, fm, depth + 1);
        self(self, sm, s1, fm, f1, depth + 1);
    };

    const Complex corners[5] = {
        {re_lo, im_lo}, {re_hi, im_lo}, {re_hi, im_hi}, {re_lo, im_hi}, {re_lo, im_lo}};
    for (int e = 0; e < 4; ++e)
        walk(walk, corners[e], corners[e + 1], f(corners[e]), f(corners[e + 1]), 0);
    return static_cast<int>(std::llround(total / (2.0 * kPi)));
}

}  // namespace oracle
