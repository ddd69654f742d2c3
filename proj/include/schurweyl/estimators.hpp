#pragma once

#include <cstdint>
#include <optional>

#include "schurweyl/partition.hpp"
#include "schurweyl/sampling.hpp"

namespace schurweyl {

/// Estimator output. Entropies are in nats. moment_estimate is the raw
/// M-hat_alpha and is absent for the von Neumann path. valid is false exactly
/// when the integral-alpha path produced a nonpositive moment estimate.
struct EstimateReport {
    double entropy_estimate = 0.0;
    std::optional<double> moment_estimate;
    bool valid = true;
    std::int64_t n = 0;
    int d = 0;
    double alpha = 1.0;
};

/// Empirical spectrum lambda_i/n, zero-padded to d entries when d > l(lambda)
/// (d = 0 means l(lambda)). Requires |lambda| == n.
Spectrum eyd_distribution(const Partition& shape, std::int64_t n, int d = 0);

/// S-hat = sum (lambda_i/n) log(n/lambda_i), with 0 log 0 := 0.
EstimateReport eyd_von_neumann(const Partition& shape);

/// S-hat_alpha = log(sum (lambda_i/n)^alpha) / (1-alpha), alpha > 0, alpha != 1.
EstimateReport eyd_renyi(const Partition& shape, double alpha);

/// Algorithm-style estimator for integral alpha >= 2:
/// M-hat = p#_(alpha)(lambda) / n^{alpha_falling}; entropy log(M-hat)/(1-alpha)
/// when M-hat > 0, otherwise a flagged invalid report. Requires n >= alpha.
EstimateReport integral_renyi_estimate(const Partition& shape, int alpha);

/// Median of `repeats` independent single-run estimates (odd repeats;
/// invalid runs excluded, all-invalid yields an invalid report). Dispatches on
/// alpha: 1 -> von Neumann, integral >= 2 -> the p# path, otherwise EYD Renyi.
EstimateReport median_amplified_estimate(const Spectrum& eta, std::int64_t n, double alpha,
                                         int repeats, RngStream& rng);

/// Exact S_alpha of a spectrum (alpha = 1 gives the Shannon/von Neumann value).
double true_entropy(const Spectrum& eta, double alpha);

}  // namespace schurweyl
