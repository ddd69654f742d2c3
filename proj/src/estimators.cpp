#include "schurweyl/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "schurweyl/symmetric.hpp"

namespace schurweyl {

Spectrum eyd_distribution(const Partition& shape, std::int64_t n, int d) {
    if (shape.size() != n)
        throw std::invalid_argument("eyd_distribution: |lambda| != n");
    if (d == 0) d = shape.length();
    if (d < shape.length())
        throw std::invalid_argument("eyd_distribution: d smaller than l(lambda)");
    std::vector<double> p(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < shape.length(); ++i)
        p[static_cast<std::size_t>(i)] = static_cast<double>(shape.part(i)) / static_cast<double>(n);
    return Spectrum(std::move(p));
}

EstimateReport eyd_von_neumann(const Partition& shape) {
    if (shape.empty()) throw std::invalid_argument("eyd_von_neumann: empty shape");
    const double n = static_cast<double>(shape.size());
    double s = 0.0;
    for (int part : shape.parts()) s += (part / n) * std::log(n / part);
    return {.entropy_estimate = s,
            .moment_estimate = std::nullopt,
            .valid = true,
            .n = shape.size(),
            .d = shape.length(),
            .alpha = 1.0};
}

EstimateReport eyd_renyi(const Partition& shape, double alpha) {
    if (shape.empty()) throw std::invalid_argument("eyd_renyi: empty shape");
    if (!(alpha > 0) || alpha == 1.0)
        throw std::invalid_argument("eyd_renyi: alpha must be positive and != 1");
    const double n = static_cast<double>(shape.size());
    double moment = 0.0;
    for (int part : shape.parts()) moment += std::pow(part / n, alpha);
    return {.entropy_estimate = std::log(moment) / (1.0 - alpha),
            .moment_estimate = moment,
            .valid = true,
            .n = shape.size(),
            .d = shape.length(),
            .alpha = alpha};
}

EstimateReport integral_renyi_estimate(const Partition& shape, int alpha) {
    if (alpha < 2) throw std::invalid_argument("integral_renyi_estimate: alpha must be >= 2");
    const std::int64_t n = shape.size();
    if (n < alpha)
        throw std::invalid_argument("integral_renyi_estimate: need n >= alpha copies");
    double moment =
        p_sharp_single_cycle(alpha, shape) / static_cast<double>(falling_power(n, alpha));
    EstimateReport rep{.entropy_estimate = std::numeric_limits<double>::quiet_NaN(),
                       .moment_estimate = moment,
                       .valid = moment > 0.0,
                       .n = n,
                       .d = shape.length(),
                       .alpha = static_cast<double>(alpha)};
    if (rep.valid) rep.entropy_estimate = std::log(moment) / (1.0 - alpha);
    return rep;
}

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size();
    return m % 2 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

}  // namespace

EstimateReport median_amplified_estimate(const Spectrum& eta, std::int64_t n, double alpha,
                                         int repeats, RngStream& rng) {
    if (repeats < 1 || repeats % 2 == 0)
        throw std::invalid_argument("median_amplified_estimate: repeats must be odd");
    const bool integral = alpha == std::floor(alpha);
    std::vector<double> entropies, moments;
    for (int r = 0; r < repeats; ++r) {
        RngStream sub(derive_seed(rng.next_u64(), static_cast<std::uint64_t>(r)));
        Partition shape = sample_sw(eta, n, sub);
        EstimateReport one;
        if (alpha == 1.0)
            one = eyd_von_neumann(shape);
        else if (integral && alpha >= 2.0)
            one = integral_renyi_estimate(shape, static_cast<int>(alpha));
        else
            one = eyd_renyi(shape, alpha);
        if (!one.valid) continue;
        entropies.push_back(one.entropy_estimate);
        if (one.moment_estimate) moments.push_back(*one.moment_estimate);
    }
    EstimateReport rep{.entropy_estimate = std::numeric_limits<double>::quiet_NaN(),
                       .moment_estimate = std::nullopt,
                       .valid = !entropies.empty(),
                       .n = n,
                       .d = eta.dimension(),
                       .alpha = alpha};
    if (rep.valid) {
        rep.entropy_estimate = median_of(std::move(entropies));
        if (!moments.empty()) rep.moment_estimate = median_of(std::move(moments));
    }
    return rep;
}

double true_entropy(const Spectrum& eta, double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("true_entropy: alpha must be > 0");
    if (alpha == 1.0) {
        double s = 0.0;
        for (double p : eta.probs())
            if (p > 0) s -= p * std::log(p);
        return s;
    }
    return std::log(power_sum(eta.probs(), alpha)) / (1.0 - alpha);
}

}  // namespace schurweyl
