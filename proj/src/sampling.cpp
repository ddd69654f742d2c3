#include "schurweyl/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "schurweyl/symmetric.hpp"

namespace schurweyl {

double RngStream::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1, u2;
    do {
        u1 = next_unit();
    } while (u1 == 0.0);
    u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    have_spare_ = true;
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    return mix64(seed ^ mix64(salt));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt1, std::uint64_t salt2) {
    return derive_seed(derive_seed(seed, salt1), salt2);
}

Spectrum::Spectrum(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw std::invalid_argument("Spectrum: empty");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) throw std::invalid_argument("Spectrum: negative entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("Spectrum: entries must sum to 1");
}

Spectrum spectrum_uniform(int d) {
    if (d < 1) throw std::invalid_argument("spectrum_uniform: d must be >= 1");
    return Spectrum(std::vector<double>(static_cast<std::size_t>(d), 1.0 / d));
}

Spectrum spectrum_integral_lb(int d, double eps, double alpha) {
    if (d < 2 || eps <= 0 || alpha <= 1)
        throw std::domain_error("spectrum_integral_lb: need d >= 2, eps > 0, alpha > 1");
    double bump = std::pow(eps * d, 1.0 / alpha);
    if (!(bump < d - 1))
        throw std::domain_error("spectrum_integral_lb: (eps d)^{1/alpha} must be < d-1");
    std::vector<double> p(static_cast<std::size_t>(d), (1.0 - bump / (d - 1)) / d);
    p[0] = (1.0 + bump) / d;
    double sum = std::accumulate(p.begin(), p.end(), 0.0);
    p[0] += 1.0 - sum;  // absorb rounding so the invariant holds exactly
    return Spectrum(std::move(p));
}

Spectrum spectrum_small_alpha_lb(int d, double eps, double alpha) {
    if (d < 1 || eps <= 0 || !(alpha > 0 && alpha < 1))
        throw std::domain_error("spectrum_small_alpha_lb: need d >= 1, eps > 0, 0 < alpha < 1");
    double head_gap = eps / std::pow(static_cast<double>(d), 1.0 / alpha - 1.0);
    if (!(head_gap < 1.0))
        throw std::domain_error("spectrum_small_alpha_lb: eps must be < d^{1/alpha-1}");
    std::vector<double> p(static_cast<std::size_t>(d) + 1,
                          eps / std::pow(static_cast<double>(d), 1.0 / alpha));
    p[0] = 1.0 - head_gap;
    double sum = std::accumulate(p.begin(), p.end(), 0.0);
    p[0] += 1.0 - sum;
    return Spectrum(std::move(p));
}

Spectrum spectrum_zipf(int d) {
    if (d < 1) throw std::invalid_argument("spectrum_zipf: d must be >= 1");
    std::vector<double> p(static_cast<std::size_t>(d));
    double z = 0.0;
    for (int i = 0; i < d; ++i) z += 1.0 / (i + 1);
    for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = 1.0 / ((i + 1) * z);
    double sum = std::accumulate(p.begin(), p.end(), 0.0);
    p[0] += 1.0 - sum;
    return Spectrum(std::move(p));
}

Spectrum load_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spectrum file: " + path);
    std::vector<double> p;
    double v;
    while (in >> v) p.push_back(v);
    if (p.empty()) throw std::runtime_error("spectrum file is empty: " + path);
    double sum = std::accumulate(p.begin(), p.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::runtime_error("spectrum file does not sum to 1: " + path);
    for (double& e : p) e /= sum;  // renormalize residual within tolerance
    return Spectrum(std::move(p));
}

std::vector<int> sample_word(const Spectrum& eta, std::int64_t n, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("sample_word: n must be >= 1");
    const auto probs = eta.probs();
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;
    std::vector<int> word(static_cast<std::size_t>(n));
    for (auto& sym : word) {
        double u = rng.next_unit();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        sym = static_cast<int>(it - cdf.begin()) + 1;
    }
    return word;
}

std::string word_str(std::span<const int> word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word[i]);
    }
    return out;
}

Partition rsk_shape(std::span<const int> word) {
    if (word.empty()) throw std::invalid_argument("rsk_shape: empty word");
    std::vector<std::vector<int>> rows;
    for (int x : word) {
        int carry = x;
        for (auto& row : rows) {
            auto it = std::upper_bound(row.begin(), row.end(), carry);
            if (it == row.end()) {
                row.push_back(carry);
                carry = -1;
                break;
            }
            std::swap(*it, carry);
        }
        if (carry != -1) rows.push_back({carry});
    }
    std::vector<int> shape(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) shape[i] = static_cast<int>(rows[i].size());
    return Partition(std::move(shape));
}

SWDistribution exact_sw_distribution(const Spectrum& eta, int n, int cap) {
    if (n < 1) throw std::invalid_argument("exact_sw_distribution: n must be >= 1");
    if (n > cap)
        throw std::length_error("exact_sw_distribution: n exceeds the exact-regime cap");
    SWDistribution out;
    out.n = n;
    out.d = eta.dimension();
    for (const Partition& lam : partitions_of(n, eta.dimension()))
        out.table.emplace(lam, static_cast<double>(dim(lam)) * schur_eval(lam, eta.probs()));
    return out;
}

Partition sample_sw(const Spectrum& eta, std::int64_t n, RngStream& rng) {
    auto word = sample_word(eta, n, rng);
    return rsk_shape(word);
}

}  // namespace schurweyl
