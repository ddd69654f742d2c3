#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "schurweyl/estimators.hpp"
#include "schurweyl/sampling.hpp"

namespace schurweyl {

struct ExperimentConfig {
    std::string mode;  // estimate | sweep | lowerbound | selftest
    double alpha = 2.0;
    std::vector<int> d_grid;
    std::vector<std::int64_t> n_grid;
    double eps = 0.1;
    int trials = 1;
    std::uint64_t seed = 1;
    std::string spectrum = "uniform";  // builtin name or file path
    std::string out;                   // empty -> stdout
    int threads = 1;
    std::string selftest_level = "quick";
    int wright_max_size = 10;

    void validate() const;  // throws std::invalid_argument on config errors
};

struct SweepRow {
    std::string experiment;
    double alpha = 0.0;
    int d = 0;
    std::int64_t n = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    double estimate = 0.0;
    double true_value = 0.0;
    double abs_error = 0.0;
    bool valid = false;
    bool success = false;  // valid && abs_error <= eps
};

/// Builtin spectrum by name ("uniform", "zipf", "lb-int", "lb-small") or a
/// file of whitespace-separated probabilities. d applies to builtins; a file
/// must agree with d when d > 0.
Spectrum make_spectrum(const std::string& source, int d, double eps, double alpha);

/// One seeded estimator run: weak Schur sample then the estimator selected by
/// alpha (1 -> EYD von Neumann, integral >= 2 -> p# path, else EYD Renyi).
EstimateReport single_run(const Spectrum& eta, std::int64_t n, double alpha, std::uint64_t seed);

/// Success fraction over `trials` independent runs. Trials are distributed
/// over `threads` workers; per-trial streams are derived from the seed so the
/// result is identical for any thread count.
double success_fraction(const Spectrum& eta, std::int64_t n, double alpha, double eps,
                        double true_value, int trials, std::uint64_t seed, int threads = 1);

struct ThresholdOptions {
    int trials_per_probe = 200;
    double target = 2.0 / 3.0;
    std::int64_t n_min = 2;
    std::int64_t n_max = std::int64_t{1} << 26;
    double bisect_rel = 0.05;
};

/// Smallest n (up to bisection resolution) where frac_at(n, probe_seed)
/// reaches the target; doubling bracket then geometric bisection.
std::int64_t find_threshold_n(const std::function<double(std::int64_t, std::uint64_t)>& frac_at,
                              std::uint64_t seed, const ThresholdOptions& opt);

/// Smallest copy count where the alpha-estimator succeeds (|error| <= eps)
/// with frequency >= 2/3 against the given spectrum.
std::int64_t threshold_copies(const Spectrum& eta, double alpha, double eps, std::uint64_t seed,
                              const ThresholdOptions& opt, int threads = 1);

/// Wilson score interval for a binomial proportion (z = 1.96).
struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};
WilsonInterval wilson_interval(int successes, int trials);

/// Chi-squared goodness-of-fit p-value; expected bins below min_expected are
/// pooled. observed are counts, expected are probabilities over the same bins.
double chi_square_gof_pvalue(std::span<const std::int64_t> observed,
                             std::span<const double> expected, double min_expected = 5.0);

/// Least-squares slope of y against x.
double fit_slope(std::span<const double> x, std::span<const double> y);

/// Stable formatting used for every CSV number (%.17g round-trip).
std::string csv_double(double v);

int run_estimate(const ExperimentConfig& cfg, std::ostream& os);
int run_sweep(const ExperimentConfig& cfg, std::ostream& os);
int run_lowerbound(const ExperimentConfig& cfg, std::ostream& os);
int run_selftest(const ExperimentConfig& cfg, std::ostream& os);

}  // namespace schurweyl
