#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schurweyl {

/// Arbitrary-precision count. Factorials, dimensions and partition numbers
/// overflow 64 bits well inside the ranges we work at (n! already at n=21).
using BigCount = boost::multiprecision::cpp_int;

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (size 0, length 0) is a valid value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::int64_t size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part at 0-based index i, 0 beyond the last row.
    int part(int i) const noexcept {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    Partition conjugate() const;

    /// Comma-joined parts, e.g. "6,4,3,3,1". Empty partition renders as "".
    std::string str() const;
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    std::int64_t size_ = 0;
};

/// All partitions of m (length <= max_length when given), each exactly once,
/// in reverse-lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> partitions_of(int m, std::optional<int> max_length = std::nullopt);

/// p(m) via the Euler pentagonal-number recurrence, exact.
BigCount partition_count(int m);

/// Number of standard Young tableaux of the given shape (hook-length formula).
BigCount dim(const Partition& shape);

/// Multiset of box contents j - i, rows/columns 1-indexed, row-major order.
std::vector<int> contents(const Partition& shape);

/// Product over boxes of (z + content).
double rising_power(double z, const Partition& mu);

/// n(n-1)...(n-r+1); 1 when r = 0, 0 when r > n.
BigCount falling_power(std::int64_t n, int r);

/// True iff every prefix sum of mu dominates the one of nu (zero-padded).
/// Requires |mu| == |nu|.
bool majorizes(const Partition& mu, const Partition& nu);

/// Number of partitions interlacing below mu: prod_i (mu_i - mu_{i+1} + 1).
BigCount prec_count(const Partition& mu);

/// All lambda with mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ... (the empty
/// partition included when admissible).
std::vector<Partition> interlacing_predecessors(const Partition& mu);

/// mu with k parts equal to 1 appended.
Partition adjoin_ones(const Partition& mu, int k);

}  // namespace schurweyl
