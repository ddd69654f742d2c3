#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "oracle.hpp"
#include "schurweyl/harness.hpp"
#include "schurweyl/sampling.hpp"
#include "schurweyl/symmetric.hpp"

using namespace schurweyl;

namespace {

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("spectrum constructors") {
    auto u1 = spectrum_uniform(1);
    CHECK(u1.entry(0) == doctest::Approx(1.0));
    auto u4 = spectrum_uniform(4);
    for (int i = 0; i < 4; ++i) CHECK(u4.entry(i) == doctest::Approx(0.25));
    CHECK(power_sum(u4.probs(), 2.0) == doctest::Approx(0.25));

    auto lb = spectrum_integral_lb(16, 0.5, 2.0);
    CHECK(lb.entry(0) == doctest::Approx((1.0 + std::sqrt(8.0)) / 16.0));
    CHECK(std::accumulate(lb.probs().begin(), lb.probs().end(), 0.0) == doctest::Approx(1.0));
    // eps -> 0 approaches uniform
    auto tiny = spectrum_integral_lb(16, 1e-12, 2.0);
    for (int i = 0; i < 16; ++i) CHECK(tiny.entry(i) == doctest::Approx(1.0 / 16).epsilon(1e-3));
    CHECK_THROWS_AS(spectrum_integral_lb(2, 10.0, 2.0), std::domain_error);

    auto sm = spectrum_small_alpha_lb(4, 0.2, 0.5);
    CHECK(sm.dimension() == 5);
    CHECK(sm.entry(0) == doctest::Approx(0.95));
    for (int i = 2; i <= 4; ++i) CHECK(sm.entry(i) == doctest::Approx(sm.entry(1)));
    CHECK(std::accumulate(sm.probs().begin(), sm.probs().end(), 0.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(spectrum_small_alpha_lb(4, 5.0, 0.5), std::domain_error);

    CHECK_THROWS_AS(Spectrum({0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(Spectrum({-0.1, 1.1}), std::invalid_argument);
}

TEST_CASE("spectrum file loading") {
    {
        std::ofstream f(tmp_path("spectrum_ok.txt"));
        f << "0.5 0.25\n0.25\n";
    }
    auto s = load_spectrum_file(tmp_path("spectrum_ok.txt"));
    CHECK(s.dimension() == 3);
    CHECK(s.entry(0) == doctest::Approx(0.5));
    {
        std::ofstream f(tmp_path("spectrum_bad.txt"));
        f << "0.5 0.1\n";
    }
    CHECK_THROWS(load_spectrum_file(tmp_path("spectrum_bad.txt")));
    CHECK_THROWS(load_spectrum_file("no_such_file.txt"));
}

TEST_CASE("sample_word: determinism and frequencies") {
    auto point = Spectrum({1.0});
    RngStream rng(9);
    auto w = sample_word(point, 50, rng);
    CHECK(std::all_of(w.begin(), w.end(), [](int s) { return s == 1; }));

    auto eta = Spectrum({0.2, 0.5, 0.3});
    RngStream a(123), b(123);
    CHECK(sample_word(eta, 1000, a) == sample_word(eta, 1000, b));

    const std::int64_t n = 100000;
    RngStream c(7);
    auto big = sample_word(eta, n, c);
    std::vector<std::int64_t> counts(3, 0);
    for (int s : big) ++counts[static_cast<std::size_t>(s - 1)];
    for (int i = 0; i < 3; ++i) {
        double freq = static_cast<double>(counts[static_cast<std::size_t>(i)]) / n;
        CHECK(std::abs(freq - eta.entry(i)) <=
              4.0 * std::sqrt(eta.entry(i) / static_cast<double>(n)));
    }
}

TEST_CASE("rsk_shape examples") {
    CHECK(rsk_shape(std::vector<int>{1, 1, 2}) == Partition({3}));
    CHECK(rsk_shape(std::vector<int>{2, 1}) == Partition({1, 1}));
    CHECK(rsk_shape(std::vector<int>{1, 2, 1}) == Partition({2, 1}));
    CHECK(rsk_shape(std::vector<int>{3, 2, 1}) == Partition({1, 1, 1}));
    CHECK_THROWS(rsk_shape(std::vector<int>{}));
}

TEST_CASE("rsk_shape satisfies Greene's property (exhaustive)") {
    // every word of length <= 8 over alphabet {1,2,3}
    for (int len = 1; len <= 8; ++len) {
        std::vector<int> word(static_cast<std::size_t>(len), 1);
        for (;;) {
            auto shape = rsk_shape(word);
            auto best = oracle::lnds_prefix_sums(word, 3);
            std::int64_t prefix = 0;
            for (int k = 1; k <= 3; ++k) {
                prefix += shape.part(k - 1);
                CHECK(prefix == best[static_cast<std::size_t>(k - 1)]);
            }
            int pos = len - 1;
            while (pos >= 0 && word[static_cast<std::size_t>(pos)] == 3) {
                word[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++word[static_cast<std::size_t>(pos)];
        }
    }
}

TEST_CASE("rsk shape majorizes the empirical distribution") {
    RngStream rng(31);
    for (int rep = 0; rep < 10000; ++rep) {
        int d = 2 + static_cast<int>(rng.next_u64() % 4);
        int n = 2 + static_cast<int>(rng.next_u64() % 60);
        std::vector<int> w(static_cast<std::size_t>(n));
        for (auto& s : w) s = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(d));
        auto lam = rsk_shape(w);
        std::vector<int> counts(static_cast<std::size_t>(d), 0);
        for (int s : w) ++counts[static_cast<std::size_t>(s - 1)];
        std::sort(counts.begin(), counts.end(), std::greater<>());
        std::int64_t pl = 0, pc = 0;
        for (int i = 0; i < d; ++i) {
            pl += lam.part(i);
            pc += counts[static_cast<std::size_t>(i)];
            CHECK(pl >= pc);
        }
    }
}

TEST_CASE("exact_sw_distribution") {
    auto one = exact_sw_distribution(spectrum_uniform(3), 1);
    REQUIRE(one.table.size() == 1);
    CHECK(one.table.at(Partition({1})) == doctest::Approx(1.0));

    auto two = exact_sw_distribution(spectrum_uniform(2), 2);
    CHECK(two.table.at(Partition({2})) == doctest::Approx(0.75));
    CHECK(two.table.at(Partition({1, 1})) == doctest::Approx(0.25));

    RngStream rng(15);
    for (int n = 1; n <= 8; ++n)
        for (int d = 2; d <= 4; ++d) {
            std::vector<double> p(static_cast<std::size_t>(d));
            double sum = 0.0;
            for (auto& v : p) {
                v = rng.next_unit() + 0.05;
                sum += v;
            }
            for (auto& v : p) v /= sum;
            double s2 = std::accumulate(p.begin(), p.end(), 0.0);
            p[0] += 1.0 - s2;
            auto sw = exact_sw_distribution(Spectrum(p), n);
            double total = 0.0;
            for (const auto& [lam, prob] : sw.table) {
                CHECK(lam.size() == n);
                CHECK(lam.length() <= d);
                CHECK(prob >= -1e-12);
                total += prob;
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
        }

    CHECK_THROWS_AS(exact_sw_distribution(spectrum_uniform(2), 40), std::length_error);
}

TEST_CASE("sample_sw at n=1") {
    RngStream rng(1);
    for (int t = 0; t < 20; ++t)
        CHECK(sample_sw(spectrum_uniform(3), 1, rng) == Partition({1}));
}

TEST_CASE("sample_sw matches the exact distribution (chi-squared GOF)") {
    struct Case {
        int n;
        Spectrum eta;
    };
    const std::vector<Case> cases = {
        {3, spectrum_uniform(2)},   {3, Spectrum({0.7, 0.3})},
        {4, spectrum_uniform(2)},   {4, Spectrum({0.7, 0.3})},
        {4, spectrum_uniform(3)},   {4, Spectrum({0.5, 0.3, 0.2})},
        {5, spectrum_uniform(3)},   {5, Spectrum({0.6, 0.3, 0.1})},
    };
    int caseno = 0;
    for (const auto& c : cases) {
        ++caseno;
        auto sw = exact_sw_distribution(c.eta, c.n);
        std::vector<Partition> keys;
        std::vector<double> expected;
        for (const auto& [lam, p] : sw.table) {
            keys.push_back(lam);
            expected.push_back(p);
        }
        std::vector<std::int64_t> counts(keys.size(), 0);
        const int trials = 200000;
        RngStream rng(derive_seed(99, static_cast<std::uint64_t>(caseno)));
        for (int t = 0; t < trials; ++t) {
            auto lam = sample_sw(c.eta, c.n, rng);
            auto it = std::lower_bound(keys.begin(), keys.end(), lam);
            REQUIRE(it != keys.end());
            REQUIRE(*it == lam);
            ++counts[static_cast<std::size_t>(it - keys.begin())];
        }
        CHECK(chi_square_gof_pvalue(counts, expected) > 1e-3);
    }
}

TEST_CASE("sample_sw is invariant under spectrum reordering") {
    auto sorted = Spectrum({0.6, 0.3, 0.1});
    auto shuffled = Spectrum({0.1, 0.6, 0.3});
    auto sw = exact_sw_distribution(sorted, 5);
    std::vector<Partition> keys;
    std::vector<double> expected;
    for (const auto& [lam, p] : sw.table) {
        keys.push_back(lam);
        expected.push_back(p);
    }
    std::vector<std::int64_t> counts(keys.size(), 0);
    RngStream rng(4242);
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        auto lam = sample_sw(shuffled, 5, rng);
        auto it = std::lower_bound(keys.begin(), keys.end(), lam);
        ++counts[static_cast<std::size_t>(it - keys.begin())];
    }
    CHECK(chi_square_gof_pvalue(counts, expected) > 1e-3);
}

TEST_CASE("p# is an unbiased moment estimator under exact SW") {
    RngStream rng(21);
    for (int d = 2; d <= 3; ++d) {
        std::vector<double> p(static_cast<std::size_t>(d));
        double sum = 0.0;
        for (auto& v : p) {
            v = rng.next_unit() + 0.1;
            sum += v;
        }
        for (auto& v : p) v /= sum;
        double s2 = std::accumulate(p.begin(), p.end(), 0.0);
        p[0] += 1.0 - s2;
        Spectrum eta(p);
        for (int n = 1; n <= 8; ++n) {
            auto sw = exact_sw_distribution(eta, n);
            for (int r = 1; r <= 4; ++r)
                for (const auto& mu : partitions_of(r)) {
                    double lhs = 0.0;
                    for (const auto& [lam, prob] : sw.table) lhs += prob * p_sharp(mu, lam);
                    double rhs = static_cast<double>(falling_power(n, r)) *
                                 power_sum_product(eta.probs(), mu);
                    CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(rhs)));
                }
        }
    }
}

TEST_CASE("row expectations concentrate (exact, n <= 10)") {
    // |eta_i - E[lambda_i/n]| <= 2 sqrt(min{1, eta_i d}/n) with eta sorted
    const std::vector<Spectrum> spectra = {spectrum_uniform(3), Spectrum({0.6, 0.3, 0.1}),
                                           spectrum_uniform(2), Spectrum({0.85, 0.15})};
    for (const auto& eta : spectra) {
        std::vector<double> sorted(eta.probs().begin(), eta.probs().end());
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        const int d = eta.dimension();
        for (int n = 2; n <= 10; ++n) {
            auto sw = exact_sw_distribution(eta, n);
            std::vector<double> mean(static_cast<std::size_t>(d), 0.0);
            for (const auto& [lam, prob] : sw.table)
                for (int i = 0; i < d; ++i)
                    mean[static_cast<std::size_t>(i)] +=
                        prob * static_cast<double>(lam.part(i)) / n;
            for (int i = 0; i < d; ++i) {
                double cap = std::min(1.0, sorted[static_cast<std::size_t>(i)] * d);
                CHECK(std::abs(sorted[static_cast<std::size_t>(i)] -
                               mean[static_cast<std::size_t>(i)]) <=
                      2.0 * std::sqrt(cap / n) + 1e-12);
            }
        }
    }
}

TEST_CASE("row expectations concentrate (Monte Carlo, n = 10^4)") {
    const auto eta = Spectrum({0.4, 0.2, 0.2, 0.1, 0.05, 0.05});
    const int d = eta.dimension();
    const std::int64_t n = 10000;
    const int trials = 400;
    std::vector<double> mean(static_cast<std::size_t>(d), 0.0);
    std::vector<double> sq(static_cast<std::size_t>(d), 0.0);
    for (int t = 0; t < trials; ++t) {
        RngStream rng(derive_seed(17, static_cast<std::uint64_t>(t)));
        auto lam = sample_sw(eta, n, rng);
        for (int i = 0; i < d; ++i) {
            double v = static_cast<double>(lam.part(i)) / static_cast<double>(n);
            mean[static_cast<std::size_t>(i)] += v;
            sq[static_cast<std::size_t>(i)] += v * v;
        }
    }
    for (int i = 0; i < d; ++i) {
        double m = mean[static_cast<std::size_t>(i)] / trials;
        double var = sq[static_cast<std::size_t>(i)] / trials - m * m;
        double se = std::sqrt(std::max(var, 0.0) / trials);
        double cap = std::min(1.0, eta.entry(i) * d);
        CHECK(std::abs(eta.entry(i) - m) <=
              2.0 * std::sqrt(cap / static_cast<double>(n)) + 3.0 * se);
    }
}

TEST_CASE("sample_sw frequency of the full row at n=2 matches 3/4") {
    RngStream rng(271);
    const int trials = 100000;
    int full_row = 0;
    for (int t = 0; t < trials; ++t)
        if (sample_sw(spectrum_uniform(2), 2, rng) == Partition({2})) ++full_row;
    CHECK(std::abs(static_cast<double>(full_row) / trials - 0.75) < 0.01);
}

TEST_CASE("word_str") {
    CHECK(word_str(std::vector<int>{1, 3, 2, 1}) == "1,3,2,1");
    CHECK(word_str(std::vector<int>{}) == "");
}

TEST_CASE("rsk_shape matches the subsequence oracle on random larger words") {
    RngStream rng(272);
    for (int rep = 0; rep < 2000; ++rep) {
        int len = 9 + static_cast<int>(rng.next_u64() % 16);  // 9..24
        int d = 2 + static_cast<int>(rng.next_u64() % 5);     // 2..6
        std::vector<int> w(static_cast<std::size_t>(len));
        for (auto& s : w) s = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(d));
        auto shape = rsk_shape(w);
        auto best = oracle::lnds_prefix_sums(w, 4);
        std::int64_t prefix = 0;
        for (int k = 1; k <= 4; ++k) {
            prefix += shape.part(k - 1);
            CHECK(prefix == best[static_cast<std::size_t>(k - 1)]);
        }
    }
}

TEST_CASE("zero-probability symbols do not disturb the exact distribution") {
    auto padded = exact_sw_distribution(Spectrum({0.5, 0.5, 0.0}), 4);
    auto plain = exact_sw_distribution(Spectrum({0.5, 0.5}), 4);
    for (const auto& [lam, p] : plain.table) {
        REQUIRE(padded.table.count(lam) == 1);
        CHECK(padded.table.at(lam) == doctest::Approx(p).epsilon(1e-12));
    }
    // the extra row has zero weight
    for (const auto& [lam, p] : padded.table)
        if (lam.length() == 3) CHECK(std::abs(p) < 1e-12);
}
