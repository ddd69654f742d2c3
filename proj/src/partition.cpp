#include "schurweyl/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace schurweyl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int row : parts_)
        for (int j = 0; j < row; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto token = text.substr(pos, comma - pos);
        if (token.empty()) throw std::invalid_argument("Partition::parse: empty part");
        parts.push_back(std::stoi(std::string(token)));
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

namespace {

void enumerate_rec(int remaining, int max_part, int slots_left,
                   std::vector<int>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    if (slots_left == 0) return;
    // Largest feasible first part gives reverse-lexicographic order.
    int hi = std::min(remaining, max_part);
    // Need enough slots: first part p with slots_left rows covers at most p*slots_left.
    for (int p = hi; p >= 1; --p) {
        if (static_cast<std::int64_t>(p) * slots_left < remaining) break;
        stack.push_back(p);
        enumerate_rec(remaining - p, p, slots_left - 1, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int m, std::optional<int> max_length) {
    if (m < 0) throw std::invalid_argument("partitions_of: m must be >= 0");
    std::vector<Partition> out;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    int slots = max_length ? *max_length : m;
    std::vector<int> stack;
    enumerate_rec(m, m, slots, stack, out);
    return out;
}

BigCount partition_count(int m) {
    if (m < 0) throw std::invalid_argument("partition_count: m must be >= 0");
    // p(k) = sum_j (-1)^{j-1} [ p(k - j(3j-1)/2) + p(k - j(3j+1)/2) ]
    std::vector<BigCount> p(static_cast<std::size_t>(m) + 1);
    p[0] = 1;
    for (int k = 1; k <= m; ++k) {
        BigCount acc = 0;
        for (int j = 1;; ++j) {
            std::int64_t g1 = static_cast<std::int64_t>(j) * (3 * j - 1) / 2;
            std::int64_t g2 = static_cast<std::int64_t>(j) * (3 * j + 1) / 2;
            if (g1 > k && g2 > k) break;
            BigCount term = 0;
            if (g1 <= k) term += p[static_cast<std::size_t>(k - g1)];
            if (g2 <= k) term += p[static_cast<std::size_t>(k - g2)];
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[static_cast<std::size_t>(k)] = acc;
    }
    return p[static_cast<std::size_t>(m)];
}

BigCount dim(const Partition& shape) {
    if (shape.empty()) return 1;
    const auto& rows = shape.parts();
    Partition conj = shape.conjugate();
    const auto& cols = conj.parts();
    BigCount numer = 1;
    for (std::int64_t v = 2; v <= shape.size(); ++v) numer *= v;
    BigCount hooks = 1;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j) {
            int hook = rows[i] - j + cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= hook;
        }
    return numer / hooks;
}

std::vector<int> contents(const Partition& shape) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(shape.size()));
    const auto& rows = shape.parts();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j)
            out.push_back(j - static_cast<int>(i));
    return out;
}

double rising_power(double z, const Partition& mu) {
    double prod = 1.0;
    const auto& rows = mu.parts();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j)
            prod *= z + (j - static_cast<int>(i));
    return prod;
}

BigCount falling_power(std::int64_t n, int r) {
    if (r < 0) throw std::invalid_argument("falling_power: r must be >= 0");
    if (r > n) return 0;
    BigCount prod = 1;
    for (int i = 0; i < r; ++i) prod *= (n - i);
    return prod;
}

bool majorizes(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size())
        throw std::invalid_argument("majorizes: partitions must have equal size");
    std::int64_t pm = 0, pn = 0;
    int len = std::max(mu.length(), nu.length());
    for (int i = 0; i < len; ++i) {
        pm += mu.part(i);
        pn += nu.part(i);
        if (pm < pn) return false;
    }
    return true;
}

BigCount prec_count(const Partition& mu) {
    BigCount prod = 1;
    for (int i = 0; i < mu.length(); ++i)
        prod *= mu.part(i) - mu.part(i + 1) + 1;
    return prod;
}

std::vector<Partition> interlacing_predecessors(const Partition& mu) {
    std::vector<Partition> out;
    std::vector<int> lam(static_cast<std::size_t>(mu.length()), 0);
    // lambda_i ranges over [mu_{i+1}, mu_i]; weak decrease is automatic.
    auto rec = [&](auto&& self, int i) -> void {
        if (i == mu.length()) {
            std::vector<int> trimmed;
            for (int v : lam)
                if (v > 0) trimmed.push_back(v);
            out.emplace_back(std::move(trimmed));
            return;
        }
        for (int v = mu.part(i); v >= mu.part(i + 1); --v) {
            lam[static_cast<std::size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

Partition adjoin_ones(const Partition& mu, int k) {
    if (k < 0) throw std::invalid_argument("adjoin_ones: k must be >= 0");
    std::vector<int> parts = mu.parts();
    parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
    return Partition(std::move(parts));
}

}  // namespace schurweyl
