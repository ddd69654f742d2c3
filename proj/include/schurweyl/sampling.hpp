#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "schurweyl/partition.hpp"

namespace schurweyl {

/// Counter-based splitmix64 stream. Hand-rolled so that output is bit-exact
/// across standard libraries and platforms; std:: distributions are
/// implementation-defined.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal (Box-Muller, one value per call).
    double next_normal();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Independent stream seed for a salted substream; trials derive theirs as
/// derive_seed(root, trial) so schedules cannot affect results.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt1, std::uint64_t salt2);

/// Probability vector over [d]. Not required to be sorted.
class Spectrum {
public:
    explicit Spectrum(std::vector<double> probs);
    int dimension() const noexcept { return static_cast<int>(probs_.size()); }
    std::span<const double> probs() const noexcept { return probs_; }
    double entry(int i) const { return probs_.at(static_cast<std::size_t>(i)); }

private:
    std::vector<double> probs_;
};

/// (1/d, ..., 1/d) -- the maximally mixed state.
Spectrum spectrum_uniform(int d);

/// First entry (1+(eps d)^{1/alpha})/d, the other d-1 entries
/// (1-(eps d)^{1/alpha}/(d-1))/d. Requires (eps d)^{1/alpha} < d-1.
Spectrum spectrum_integral_lb(int d, double eps, double alpha);

/// (d+1)-dimensional: nu_1 = 1 - eps/d^{1/alpha-1}, nu_i = eps/d^{1/alpha}
/// for i = 2..d+1. Requires eps < d^{1/alpha-1} and alpha < 1.
Spectrum spectrum_small_alpha_lb(int d, double eps, double alpha);

/// Skewed builtin: p_i proportional to 1/i.
Spectrum spectrum_zipf(int d);

/// Whitespace-separated probabilities; sum validated to 1 within 1e-9.
Spectrum load_spectrum_file(const std::string& path);

/// n i.i.d. symbols from [d] (1-based), deterministic given the stream.
std::vector<int> sample_word(const Spectrum& eta, std::int64_t n, RngStream& rng);

/// Comma-joined rendering, e.g. "1,3,2,1".
std::string word_str(std::span<const int> word);

/// Shape of the insertion tableau under semistandard row insertion (bump the
/// leftmost strictly greater entry). Prefix sums satisfy Greene's property.
Partition rsk_shape(std::span<const int> word);

/// Exact Schur-Weyl distribution at n copies: SW(lambda) = dim(lambda) s_lambda(eta).
struct SWDistribution {
    std::int64_t n = 0;
    int d = 0;
    std::map<Partition, double> table;
};

/// Requires n <= cap (default 12); shapes with more than d rows carry zero
/// probability and are omitted.
SWDistribution exact_sw_distribution(const Spectrum& eta, int n, int cap = 12);

/// One weak-Schur-sampling draw: rsk_shape(sample_word(eta, n, rng)).
Partition sample_sw(const Spectrum& eta, std::int64_t n, RngStream& rng);

}  // namespace schurweyl
