#include "schurweyl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "schurweyl/estimators.hpp"
#include "schurweyl/symmetric.hpp"

namespace schurweyl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

DistanceTriple accumulate_distances(const std::vector<std::pair<double, double>>& pq) {
    DistanceTriple out;
    for (auto [p, q] : pq) {
        out.tv += 0.5 * std::abs(p - q);
        if (p > 0.0) {
            if (q <= 0.0) {
                out.kl = kInf;
                out.chisq = kInf;
                continue;
            }
            out.kl += p * std::log(p / q);
        }
        if (q > 0.0)
            out.chisq += (p - q) * (p - q) / q;
        else if (p != q)
            out.chisq = kInf;
    }
    return out;
}

}  // namespace

DistanceTriple distances(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw std::invalid_argument("distances: supports must share an index set");
    std::vector<std::pair<double, double>> pq;
    pq.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) pq.emplace_back(p[i], q[i]);
    return accumulate_distances(pq);
}

DistanceTriple distances(const SWDistribution& p, const SWDistribution& q) {
    std::vector<std::pair<double, double>> pq;
    auto ip = p.table.begin();
    auto iq = q.table.begin();
    while (ip != p.table.end() || iq != q.table.end()) {
        if (iq == q.table.end() || (ip != p.table.end() && ip->first < iq->first)) {
            pq.emplace_back(ip->second, 0.0);
            ++ip;
        } else if (ip == p.table.end() || iq->first < ip->first) {
            pq.emplace_back(0.0, iq->second);
            ++iq;
        } else {
            pq.emplace_back(ip->second, iq->second);
            ++ip;
            ++iq;
        }
    }
    return accumulate_distances(pq);
}

double two_point_error(const Spectrum& eta, const Spectrum& nu, int n) {
    auto pe = exact_sw_distribution(eta, n);
    auto pn = exact_sw_distribution(nu, n);
    return 0.5 - 0.5 * distances(pe, pn).tv;
}

WrightResult wright_chisq(std::span<const double> x, std::int64_t n, int d, int max_size) {
    if (d != static_cast<int>(x.size()))
        throw std::invalid_argument("wright_chisq: d must equal |x|");
    if (max_size < 1 || max_size > 14)
        throw std::invalid_argument("wright_chisq: max_size must be in [1, 14]");
    double sum = 0.0;
    for (double v : x) {
        if (v < -1.0 - 1e-12) throw std::domain_error("wright_chisq: entries must be >= -1");
        sum += v;
    }
    if (std::abs(sum) > 1e-9) throw std::domain_error("wright_chisq: entries must sum to 0");

    const int top = static_cast<int>(std::min<std::int64_t>(max_size, n));
    WrightResult out;
    for (int m = 1; m <= top; ++m) {
        double layer = 0.0;
        const double fall = static_cast<double>(falling_power(n, m));
        for (const Partition& mu : partitions_of(m, d)) {
            double s = schur_eval(mu, x);
            layer += s * s / (rising_power(d, mu) * std::pow(static_cast<double>(d), m)) * fall;
        }
        out.sum += layer;
        if (m == top) out.last_layer = layer;
    }
    return out;
}

namespace {

// Cycle type of a permutation given as images (0-based), fixed points as 1-parts.
Partition cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> parts;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

// All permutations of [m] that act as a single cycle on `support` (0-based
// indices) and fix everything else.
std::vector<std::vector<int>> cycles_on(int m, const std::vector<int>& support) {
    std::vector<std::vector<int>> out;
    std::vector<int> rest(support.begin() + 1, support.end());
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<int> perm(static_cast<std::size_t>(m));
        std::iota(perm.begin(), perm.end(), 0);
        int prev = support[0];
        for (int v : rest) {
            perm[static_cast<std::size_t>(prev)] = v;
            prev = v;
        }
        perm[static_cast<std::size_t>(prev)] = support[0];
        out.push_back(std::move(perm));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

}  // namespace

std::vector<Partition> variance_partition_set(int alpha, int j) {
    if (alpha < 2) throw std::invalid_argument("variance_partition_set: alpha must be >= 2");
    if (j < 0 || j > alpha - 1)
        throw std::invalid_argument("variance_partition_set: j must be in [0, alpha-1]");
    const int m = alpha + j;
    std::vector<int> s1(static_cast<std::size_t>(alpha)), s2(static_cast<std::size_t>(alpha));
    std::iota(s1.begin(), s1.end(), 0);      // {1..alpha} as 0-based {0..alpha-1}
    std::iota(s2.begin(), s2.end(), j);      // {j+1..j+alpha}
    std::set<Partition> acc;
    for (const auto& p1 : cycles_on(m, s1))
        for (const auto& p2 : cycles_on(m, s2)) {
            std::vector<int> comp(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                comp[static_cast<std::size_t>(i)] =
                    p1[static_cast<std::size_t>(p2[static_cast<std::size_t>(i)])];
            acc.insert(cycle_type(comp));
        }
    return {acc.begin(), acc.end()};
}

std::vector<VarianceRow> variance_scaling_check(const Spectrum& eta, int alpha,
                                                std::span<const std::int64_t> n_grid,
                                                int mc_trials, RngStream& rng) {
    if (alpha < 2) throw std::invalid_argument("variance_scaling_check: alpha must be >= 2");
    std::vector<VarianceRow> rows;
    const double m2a1 = power_sum(eta.probs(), 2.0 * alpha - 1.0);
    for (std::int64_t n : n_grid) {
        VarianceRow row;
        row.n = n;
        row.bound = std::pow(static_cast<double>(n), alpha) *
                    (1.0 + std::pow(static_cast<double>(n), alpha - 1.0) * m2a1);
        if (n <= 10) {
            auto sw = exact_sw_distribution(eta, static_cast<int>(n));
            double e1 = 0.0, e2 = 0.0;
            for (const auto& [lam, prob] : sw.table) {
                double v = p_sharp(Partition({alpha}), lam);
                e1 += prob * v;
                e2 += prob * v * v;
            }
            row.variance = e2 - e1 * e1;
            row.exact = true;
        } else if (mc_trials < 2) {
            throw std::invalid_argument(
                "variance_scaling_check: Monte Carlo rows need mc_trials >= 2");
        } else {
            std::vector<double> vals(static_cast<std::size_t>(mc_trials));
            for (int t = 0; t < mc_trials; ++t) {
                RngStream sub(derive_seed(rng.next_u64(), static_cast<std::uint64_t>(t)));
                vals[static_cast<std::size_t>(t)] =
                    p_sharp_single_cycle(alpha, sample_sw(eta, n, sub));
            }
            double mean = std::accumulate(vals.begin(), vals.end(), 0.0) / mc_trials;
            double var = 0.0;
            for (double v : vals) var += (v - mean) * (v - mean);
            var /= mc_trials - 1;
            row.variance = var;
            row.exact = false;
            // bootstrap SE of the variance estimate
            const int B = 200;
            std::vector<double> boots(B);
            RngStream brng(derive_seed(rng.next_u64(), 0xB001u));
            for (int b = 0; b < B; ++b) {
                double bm = 0.0, bs = 0.0;
                std::vector<double> draw(vals.size());
                for (auto& dv : draw)
                    dv = vals[static_cast<std::size_t>(brng.next_u64() % vals.size())];
                for (double v : draw) bm += v;
                bm /= static_cast<double>(draw.size());
                for (double v : draw) bs += (v - bm) * (v - bm);
                boots[static_cast<std::size_t>(b)] = bs / (static_cast<double>(draw.size()) - 1);
            }
            double bmean = std::accumulate(boots.begin(), boots.end(), 0.0) / B;
            double bvar = 0.0;
            for (double v : boots) bvar += (v - bmean) * (v - bmean);
            row.mc_se = std::sqrt(bvar / (B - 1));
        }
        row.ratio = row.variance / row.bound;
        rows.push_back(row);
    }
    return rows;
}

bool tv_moment_gap_check(std::span<const double> p, double alpha) {
    if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("tv_moment_gap_check: need 0 < alpha < 1");
    const auto d = static_cast<double>(p.size());
    double gamma = 0.0;
    for (double v : p) gamma += std::abs(v - 1.0 / d);
    gamma *= 0.5;
    double lhs = power_sum(p, alpha);
    double rhs = (1.0 - alpha * (1.0 - alpha) * gamma * gamma) * std::pow(d, 1.0 - alpha);
    return lhs <= rhs + 1e-12;
}

double p2_bound_check(int d, std::int64_t samples, RngStream& rng) {
    if (d < 2) throw std::invalid_argument("p2_bound_check: d must be >= 2");
    auto objective = [](std::span<const double> x) {
        double acc = 0.0;
        for (double v : x)
            if (v != 0.0) acc += v * std::log(1.0 / (v * v));
        return acc;
    };
    double best = 0.0;  // the all-zero point is feasible with objective 0
    std::vector<double> x(static_cast<std::size_t>(d));
    for (std::int64_t s = 0; s < samples; ++s) {
        double mean = 0.0;
        for (auto& v : x) {
            v = rng.next_normal();
            mean += v;
        }
        mean /= d;
        double norm2 = 0.0;
        for (auto& v : x) {
            v -= mean;
            norm2 += v * v;
        }
        if (norm2 < 1e-300) continue;
        double scale = 2.0 / std::sqrt(norm2);  // onto the boundary sum x^2 = 4
        for (auto& v : x) v *= scale;
        best = std::max(best, objective(x));
    }
    return best;
}

double renyi_gap(const Spectrum& eta, const Spectrum& nu, double alpha) {
    return std::abs(true_entropy(eta, alpha) - true_entropy(nu, alpha));
}

double z_statistic(const Partition& shape, std::int64_t n, int d) {
    if (d < 1) throw std::invalid_argument("z_statistic: d must be >= 1");
    double z = 0.0;
    for (int i = 0; i < d; ++i)
        z += std::abs(static_cast<double>(shape.part(i)) / static_cast<double>(n) - 1.0 / d);
    return z;
}

}  // namespace schurweyl
