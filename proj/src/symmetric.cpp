#include "schurweyl/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace schurweyl {

namespace {

bool is_integer(double a) { return a == std::floor(a); }

}  // namespace

double power_sum(std::span<const double> eta, double alpha) {
    if (alpha < 0) throw std::domain_error("power_sum: alpha must be >= 0");
    const bool integral = is_integer(alpha);
    double acc = 0.0;
    for (double v : eta) {
        if (v < 0 && !integral)
            throw std::domain_error("power_sum: negative entry with non-integral alpha");
        if (v == 0.0) continue;  // 0^0 := 0, 0^a = 0
        acc += std::pow(v, alpha);
    }
    return acc;
}

double power_sum_product(std::span<const double> eta, const Partition& mu) {
    double prod = 1.0;
    for (int p : mu.parts()) prod *= power_sum(eta, static_cast<double>(p));
    return prod;
}

namespace {

// det by Gaussian elimination with partial pivoting; a is modified.
double det_inplace(std::vector<std::vector<double>>& a) {
    const std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (a[piv][c] == 0.0) return 0.0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            double f = a[r][c] / a[c][c];
            if (f == 0.0) continue;
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

// Complete homogeneous symmetric polynomials h_0..h_max of x, via Newton's
// identities on the power sums: k h_k = sum_{i=1..k} p_i h_{k-i}.
std::vector<double> complete_homogeneous(std::span<const double> x, int max_degree) {
    std::vector<double> p(static_cast<std::size_t>(max_degree) + 1, 0.0);
    for (double v : x) {
        double vk = 1.0;
        for (int k = 1; k <= max_degree; ++k) {
            vk *= v;
            p[static_cast<std::size_t>(k)] += vk;
        }
    }
    std::vector<double> h(static_cast<std::size_t>(max_degree) + 1, 0.0);
    h[0] = 1.0;
    for (int k = 1; k <= max_degree; ++k) {
        double acc = 0.0;
        for (int i = 1; i <= k; ++i)
            acc += p[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(k - i)];
        h[static_cast<std::size_t>(k)] = acc / k;
    }
    return h;
}

}  // namespace

double schur_eval(const Partition& shape, std::span<const double> x) {
    if (shape.empty()) return 1.0;
    const int l = shape.length();
    if (l > static_cast<int>(x.size())) return 0.0;
    const int max_degree = shape.part(0) + l - 1;
    std::vector<double> h = complete_homogeneous(x, max_degree);
    std::vector<std::vector<double>> a(static_cast<std::size_t>(l),
                                       std::vector<double>(static_cast<std::size_t>(l), 0.0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int deg = shape.part(i) - (i + 1) + (j + 1);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                deg < 0 ? 0.0 : h[static_cast<std::size_t>(deg)];
        }
    return det_inplace(a);
}

double schur_ones(const Partition& shape, int d) {
    if (d < 1) throw std::invalid_argument("schur_ones: d must be >= 1");
    if (shape.length() > d) return 0.0;
    // prod_{1<=i<j<=d} (lambda_i - lambda_j + j - i)/(j - i), exact in integers.
    BigCount num = 1, den = 1;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            num *= shape.part(i - 1) - shape.part(j - 1) + j - i;
            den *= j - i;
        }
    BigCount q = num / den;
    return static_cast<double>(q);
}

namespace {

// Beta set of a shape with l rows: b_i = lambda_i + l - 1 - i (0-based i),
// strictly decreasing, last entry >= 0.
std::vector<std::int64_t> beta_set(const Partition& shape) {
    const int l = shape.length();
    std::vector<std::int64_t> b(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i)
        b[static_cast<std::size_t>(i)] = shape.part(i) + (l - 1 - i);
    return b;
}

Partition shape_from_beta(std::vector<std::int64_t> b) {
    std::sort(b.begin(), b.end(), std::greater<>());
    const int l = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        auto part = static_cast<int>(b[static_cast<std::size_t>(i)] - (l - 1 - i));
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

// chi of `shape` on the class whose parts are cls[idx..] (weakly decreasing).
BigCount chi_rec(const Partition& shape, const std::vector<int>& cls, std::size_t idx) {
    if (shape.empty()) return 1;
    if (cls[idx] == 1) return dim(shape);  // remaining class is all ones
    const int r = cls[idx];
    auto b = beta_set(shape);
    BigCount acc = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        std::int64_t target = b[i] - r;
        if (target < 0) continue;
        bool clash = false;
        int height = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j == i) continue;
            if (b[j] == target) { clash = true; break; }
            if (b[j] > target && b[j] < b[i]) ++height;
        }
        if (clash) continue;
        auto nb = b;
        nb[i] = target;
        BigCount sub = chi_rec(shape_from_beta(std::move(nb)), cls, idx + 1);
        if (height % 2 == 0)
            acc += sub;
        else
            acc -= sub;
    }
    return acc;
}

}  // namespace

BigCount character(const Partition& shape, const Partition& cls) {
    if (shape.size() != cls.size())
        throw std::invalid_argument("character: |lambda| != |mu|");
    if (shape.empty()) return 1;
    return chi_rec(shape, cls.parts(), 0);
}

BigCount centralizer_size(const Partition& mu) {
    BigCount z = 1;
    const auto& p = mu.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        auto mult = static_cast<int>(j - i);
        for (int m = 1; m <= mult; ++m) z *= BigCount(p[i]) * m;
        i = j;
    }
    return z;
}

double p_sharp(const Partition& mu, const Partition& shape) {
    const auto r = mu.size();
    const auto n = shape.size();
    if (n < r) return 0.0;
    Partition cls = adjoin_ones(mu, static_cast<int>(n - r));
    BigCount chi = character(shape, cls);
    BigCount fall = falling_power(n, static_cast<int>(r));
    return static_cast<double>(fall) * static_cast<double>(chi) / static_cast<double>(dim(shape));
}

double p_sharp_single_cycle(int k, const Partition& shape) {
    if (k < 1) throw std::invalid_argument("p_sharp_single_cycle: k must be >= 1");
    const auto n = shape.size();
    if (n < k) return 0.0;
    // n^{k_falling} dim(shape minus strip)/dim(shape), via the beta-set form
    // dim = n! prod_{i<j}(b_i-b_j) / prod_i b_i!: only terms touching the
    // modified entry change, and the n!/(n-k)! factor cancels the falling power.
    auto b = beta_set(shape);
    double acc = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        std::int64_t target = b[i] - k;
        if (target < 0) continue;
        bool clash = false;
        int height = 0;
        double log_ratio = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j == i) continue;
            if (b[j] == target) { clash = true; break; }
            if (b[j] > target && b[j] < b[i]) ++height;
            log_ratio += std::log(std::abs(static_cast<double>(target - b[j]))) -
                         std::log(std::abs(static_cast<double>(b[i] - b[j])));
        }
        if (clash) continue;
        log_ratio += std::lgamma(static_cast<double>(b[i]) + 1.0) -
                     std::lgamma(static_cast<double>(target) + 1.0);
        double term = std::exp(log_ratio);
        acc += (height % 2 == 0) ? term : -term;
    }
    return acc;
}

std::pair<double, double> verify_basis_change(const Partition& mu, std::span<const double> x) {
    double lhs = power_sum_product(x, mu);
    double rhs = 0.0;
    for (const Partition& lam : partitions_of(static_cast<int>(mu.size())))
        rhs += static_cast<double>(character(lam, mu)) * schur_eval(lam, x);
    return {lhs, rhs};
}

std::pair<double, double> verify_branching(const Partition& mu, std::span<const double> z) {
    if (z.size() < 2) throw std::invalid_argument("verify_branching: need |z| >= 2");
    double lhs = schur_eval(mu, z);
    auto tail = z.subspan(1);
    double rhs = 0.0;
    for (const Partition& lam : interlacing_predecessors(mu))
        rhs += std::pow(z[0], static_cast<double>(mu.size() - lam.size())) * schur_eval(lam, tail);
    return {lhs, rhs};
}

}  // namespace schurweyl
