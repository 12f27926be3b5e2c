#pragma once

#include <complex>
#include <span>
#include <vector>

namespace critline {

using Complex = std::complex<double>;

// Modulus/argument pair: z = rho * exp(i*phi), phi principal in (-pi, pi].
struct PolarDecomposition {
    double rho;  // >= 0
    double phi;  // 0 when rho == 0
};

// Truncation control shared by every series in the library.
struct SeriesConfig {
    double eps = 1e-11;      // target absolute tolerance, (0, 1e-6]
    long k_max = 2'000'000;  // hard cap on series terms, >= 16
};

// Throws domain_error when cfg is outside the supported envelope.
void validate(const SeriesConfig& cfg);

// Principal complex logarithm (ln|z|, Arg z), Arg in (-pi, pi].
// Throws domain_error on z == 0 and on non-finite input.
Complex complex_log(Complex z);

// Polar form of a finite z; zero maps to (0, 0).
PolarDecomposition to_polar(Complex z);

// Reduces angle into [0, modulus). Throws domain_error on modulus <= 0 or a
// non-finite angle.
double normalize_mod(double angle, double modulus);

// Shortest distance between a and b on a circle of circumference period.
double circle_distance(double a, double b, double period);

// Neumaier-compensated accumulator; error bounded by ~2 eps_mach * sum|terms|.
// Overflow propagates as infinity and latches the overflowed() flag.
class NeumaierSum {
public:
    void add(double term);
    double value() const;
    bool overflowed() const;

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// One-shot compensated sum. Throws domain_error on non-finite terms; an
// overflowing accumulation returns +/-infinity.
double compensated_sum(std::span<const double> terms);

// Adds 2*pi multiples so successive angles differ by at most pi in magnitude.
// First element passes through unchanged. Throws domain_error on empty or
// non-finite input.
std::vector<double> unwrap_phase(std::span<const double> angles);

namespace detail {

// log sin(pi z) and log cos(w), overflow-safe for large |Im|: the dominant
// exponential is kept in log form, only a unit-bounded correction factor is
// exponentiated. Exact up to a multiple of 2*pi*i away from the real axis.
Complex log_sin_pi(Complex z);
Complex log_cos(Complex w);

// log(1 + w) without cancellation for small |w|.
Complex log1p_complex(Complex w);

}  // namespace detail

}  // namespace critline
