#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schurweyl/partition.hpp"
#include "schurweyl/sampling.hpp"

namespace schurweyl {

/// Total variation, KL divergence and chi-squared distance. Support
/// violations yield +infinity in kl/chisq; the chain 2 tv^2 <= kl <= chisq
/// always holds.
struct DistanceTriple {
    double tv = 0.0;
    double kl = 0.0;
    double chisq = 0.0;
};

DistanceTriple distances(std::span<const double> p, std::span<const double> q);
DistanceTriple distances(const SWDistribution& p, const SWDistribution& q);

/// Exact Bayes error of the two-point test between SW_eta and SW_nu at n
/// copies: 1/2 - 1/2 TV. Exact regime only (n <= 12).
double two_point_error(const Spectrum& eta, const Spectrum& nu, int n);

/// Truncated chi-squared series against the maximally mixed state:
/// sum over mu, 1 <= |mu| <= min(max_size, n), l(mu) <= d of
/// s_mu(x)^2 / (d^{rising mu} d^{|mu|}) n^{|mu| falling}.
/// last_layer reports the top retained |mu| layer total for truncation
/// diagnostics. Requires sum x_i = 0 and x_i >= -1.
struct WrightResult {
    double sum = 0.0;
    double last_layer = 0.0;
};

WrightResult wright_chisq(std::span<const double> x, std::int64_t n, int d, int max_size);

/// S_j: cycle types (fixed points kept as 1-parts) of sigma1 compose sigma2
/// over [alpha+j], where sigma1 cycles {1..alpha} and sigma2 cycles
/// {j+1..j+alpha}. Sorted, duplicates removed.
std::vector<Partition> variance_partition_set(int alpha, int j);

/// One row of the p#_(alpha) variance table. bound is
/// n^alpha (1 + n^{alpha-1} M_{2alpha-1}(eta)); ratio = variance/bound.
/// mc_se is a bootstrap standard error for Monte Carlo rows (0 when exact).
struct VarianceRow {
    std::int64_t n = 0;
    double variance = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
    bool exact = true;
    double mc_se = 0.0;
};

/// Exact rows for n <= 10 (full SW enumeration), Monte Carlo rows beyond.
std::vector<VarianceRow> variance_scaling_check(const Spectrum& eta, int alpha,
                                                std::span<const std::int64_t> n_grid,
                                                int mc_trials, RngStream& rng);

/// True iff sum p_i^alpha <= (1 - alpha(1-alpha) gamma^2) d^{1-alpha} + 1e-12,
/// where gamma = tv(p, uniform). Requires 0 < alpha < 1.
bool tv_moment_gap_check(std::span<const double> p, double alpha);

/// Max of sum x_i log(1/x_i^2) over random feasible points (centered normals
/// scaled onto sum x^2 = 4). Caller asserts <= (16/e) sqrt(d).
double p2_bound_check(int d, std::int64_t samples, RngStream& rng);

/// |S_alpha(eta) - S_alpha(nu)| from exact power sums.
double renyi_gap(const Spectrum& eta, const Spectrum& nu, double alpha);

/// Z(lambda) = sum_{i=1..d} |lambda_i/n - 1/d|.
double z_statistic(const Partition& shape, std::int64_t n, int d);

}  // namespace schurweyl
