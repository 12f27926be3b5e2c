// critline: tabulate the critical-line phase of the Riemann zeta function,
// verify the real-part identity, scan reflected ratios, list zeros.
//
//   critline <command> [args] [--eps X] [--kmax N] [--threads N] [--out PATH]
//
// Exit codes: 0 ok, 2 usage, 3 evaluation failure, 4 identity violation,
// 5 near-zero refusal.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "critline/core_math.hpp"
#include "critline/errors.hpp"
#include "critline/phase.hpp"
#include "critline/zeta.hpp"

namespace {

constexpr double kDeg = 180.0 / std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kEval = 3,
    kIdentityFail = 4,
    kNearZero = 5,
};

struct RunConfig {
    double eps = 1e-11;
    long k_max = 2'000'000;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string out_path;

    critline::SeriesConfig series() const { return {eps, k_max}; }
};

void add_common_options(CLI::App* cmd, RunConfig& rc) {
    cmd->add_option("--eps", rc.eps, "target absolute tolerance")
        ->check(CLI::Range(1e-14, 1e-6));
    cmd->add_option("--kmax", rc.k_max, "series truncation cap")
        ->check(CLI::Range(16L, 2'000'000'000L));
    cmd->add_option("--threads", rc.threads, "worker threads")
        ->check(CLI::Range(1u, 1024u));
    cmd->add_option("--out", rc.out_path, "output path (default: standard output)");
}

std::string fmt_g(double v, int digits) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v == 0.0 ? 0.0 : v);
    return buf;
}
std::string g17(double v) { return fmt_g(v, 17); }
std::string g12(double v) { return fmt_g(v, 12); }

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw critline::domain_error("cannot open output path: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

// Evaluates f(0..n-1) across a pool; results land by index, so output is
// byte-identical for any thread count.
template <typename R, typename F>
std::vector<R> parallel_map(std::size_t n, unsigned threads, F&& f) {
    std::vector<R> out(n);
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                out[i] = f(i);
            } catch (...) {
                std::scoped_lock lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<std::size_t>(threads, n);
    pool.reserve(count);
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

// Number of grid points, or -1 when it exceeds the 1e7 cap.
long grid_size(double lo, double hi, double step) {
    double count = std::floor((hi - lo) / step + 1e-9) + 1.0;
    if (!(count <= 10'000'000.0)) return -1;
    return static_cast<long>(count);
}

int cmd_phase(double t_min, double t_max, double step, const RunConfig& rc) {
    if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(step > 0.0) || t_max < t_min) {
        std::cerr << "phase: invalid range (need t_min <= t_max, step > 0)\n";
        return kUsage;
    }
    if (std::abs(t_min) > 120.0 || std::abs(t_max) > 120.0) {
        std::cerr << "phase: |t| <= 120 is the supported envelope\n";
        return kUsage;
    }
    long n = grid_size(t_min, t_max, step);
    if (n < 0) {
        std::cerr << "phase: grid exceeds 1e7 points\n";
        return kUsage;
    }
    auto cfg = rc.series();
    struct Row {
        double t, phi_deg, mod_deg, disagreement;
    };
    auto rows = parallel_map<Row>(n, rc.threads, [&](std::size_t i) {
        double t = t_min + static_cast<double>(i) * step;
        try {
            auto series = critline::phase_series(t, cfg);
            auto closed = critline::phase_from_chi(t);
            double dis = critline::circle_distance(series.phi_mod, closed.phi_mod, kHalfPi) * kDeg;
            return Row{t, series.phi * kDeg, series.phi_mod * kDeg, dis};
        } catch (const critline::convergence_error& e) {
            throw critline::convergence_error(std::string(e.what()) + " at t=" + g17(t));
        }
    });
    Output out(rc.out_path);
    auto& os = out.stream();
    os << "t,phi_deg,phi_mod90_deg,method_disagreement\n";
    for (const auto& r : rows)
        os << g17(r.t) << ',' << g12(r.phi_deg) << ',' << g12(r.mod_deg) << ','
           << g12(r.disagreement) << '\n';
    return kOk;
}

int cmd_figure(int which, const RunConfig& rc) {
    if (which != 1 && which != 2) {
        std::cerr << "figure: argument must be 1 or 2\n";
        return kUsage;
    }
    constexpr double kLo = 0.0, kHi = 60.0, kStep = 0.05;
    long n = grid_size(kLo, kHi, kStep);
    auto cfg = rc.series();
    auto results = parallel_map<critline::PhaseResult>(n, rc.threads, [&](std::size_t i) {
        double t = kLo + static_cast<double>(i) * kStep;
        try {
            return critline::phase_series(t, cfg);
        } catch (const critline::convergence_error& e) {
            throw critline::convergence_error(std::string(e.what()) + " at t=" + g17(t));
        }
    });
    Output out(rc.out_path);
    auto& os = out.stream();
    if (which == 1) {
        std::vector<double> phis(results.size());
        for (std::size_t i = 0; i < results.size(); ++i) phis[i] = results[i].phi;
        auto unwrapped = critline::unwrap_phase(phis);
        os << "t,phi_deg_unwrapped\n";
        for (std::size_t i = 0; i < unwrapped.size(); ++i)
            os << g17(kLo + static_cast<double>(i) * kStep) << ',' << g12(unwrapped[i] * kDeg)
               << '\n';
    } else {
        os << "t,phi_mod90_deg\n";
        for (std::size_t i = 0; i < results.size(); ++i)
            os << g17(kLo + static_cast<double>(i) * kStep) << ','
               << g12(results[i].phi_mod * kDeg) << '\n';
    }
    return kOk;
}

int cmd_identity(const std::vector<double>& ts, const RunConfig& rc) {
    for (double t : ts)
        if (!std::isfinite(t) || std::abs(t) > 120.0) {
            std::cerr << "identity: every |t| must be <= 120\n";
            return kUsage;
        }
    auto cfg = rc.series();
    auto residuals = parallel_map<double>(ts.size(), rc.threads, [&](std::size_t i) {
        return critline::identity_residual(ts[i], cfg);
    });
    Output out(rc.out_path);
    auto& os = out.stream();
    os << "t,residual\n";
    bool ok = true;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        os << g17(ts[i]) << ',' << g12(residuals[i]) << '\n';
        if (std::abs(residuals[i]) > 50.0 * rc.eps) ok = false;
    }
    return ok ? kOk : kIdentityFail;
}

int cmd_ratio(double t, const std::vector<double>& sigmas, const RunConfig& rc) {
    if (!(t >= 2.0)) {
        std::cerr << "ratio: t must be >= 2\n";
        return kUsage;
    }
    for (double s : sigmas)
        if (!(s > 0.0 && s < 1.0)) {
            std::cerr << "ratio: sigma values must lie in (0, 1)\n";
            return kUsage;
        }
    auto samples = critline::offline_deviation_scan(t, sigmas, rc.series());
    Output out(rc.out_path);
    auto& os = out.stream();
    os << "sigma,modulus_deviation,arg_deg\n";
    for (const auto& smp : samples)
        os << g17(smp.s.real()) << ',' << g12(smp.modulus_deviation) << ','
           << g12(std::arg(smp.ratio) * kDeg) << '\n';
    return kOk;
}

int cmd_zeros(double t_max, const RunConfig& rc) {
    if (!(t_max > 2.0) || !(t_max <= 120.0)) {
        std::cerr << "zeros: t_max must lie in (2, 120]\n";
        return kUsage;
    }
    auto records = critline::find_zeros(2.0, t_max, rc.series());
    Output out(rc.out_path);
    auto& os = out.stream();
    os << "index,t,phi_mod90_deg\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto phase = critline::phase_from_chi(records[i].t);
        os << (i + 1) << ',' << g17(records[i].t) << ',' << g12(phase.phi_mod * kDeg) << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical-line phase toolkit for the Riemann zeta function"};
    app.require_subcommand(1);

    RunConfig rc;

    double t_min = 0, t_max = 0, step = 0;
    auto* phase = app.add_subcommand("phase", "tabulate phase over a t grid");
    phase->add_option("t_min", t_min)->required();
    phase->add_option("t_max", t_max)->required();
    phase->add_option("step", step)->required();
    add_common_options(phase, rc);

    int which = 0;
    auto* figure = app.add_subcommand("figure", "plot-ready phase data, t in [0,60] step 0.05");
    figure->add_option("which", which, "1: unwrapped phase, 2: phase mod 90 degrees")->required();
    add_common_options(figure, rc);

    std::vector<double> identity_ts;
    auto* identity = app.add_subcommand("identity", "real-part identity residuals");
    identity->add_option("t", identity_ts)->required()->expected(-1);
    add_common_options(identity, rc);

    double ratio_t = 0;
    std::vector<double> sigmas;
    auto* ratio = app.add_subcommand("ratio", "reflected-ratio scan across sigma");
    ratio->add_option("t", ratio_t)->required();
    ratio->add_option("sigma", sigmas)->required()->expected(-1);
    add_common_options(ratio, rc);

    double zeros_tmax = 0;
    auto* zeros = app.add_subcommand("zeros", "critical-line zeros up to t_max with their phases");
    zeros->add_option("t_max", zeros_tmax)->required();
    add_common_options(zeros, rc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (phase->parsed()) return cmd_phase(t_min, t_max, step, rc);
        if (figure->parsed()) return cmd_figure(which, rc);
        if (identity->parsed()) return cmd_identity(identity_ts, rc);
        if (ratio->parsed()) return cmd_ratio(ratio_t, sigmas, rc);
        if (zeros->parsed()) return cmd_zeros(zeros_tmax, rc);
    } catch (const critline::near_zero_error& e) {
        std::cerr << "near-zero refusal: " << e.what() << " (zero ordinate "
                  << g17(e.zero_ordinate) << ", distance " << g12(e.distance) << ")\n";
        return kNearZero;
    } catch (const critline::convergence_error& e) {
        std::cerr << "evaluation failure: " << e.what() << '\n';
        return kEval;
    } catch (const critline::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
