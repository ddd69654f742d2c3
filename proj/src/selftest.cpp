#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

#include "schurweyl/analysis.hpp"
#include "schurweyl/estimators.hpp"
#include "schurweyl/harness.hpp"
#include "schurweyl/symmetric.hpp"

namespace schurweyl {

namespace {

struct Check {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool near(double a, double b, double tol = 1e-9) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

Spectrum random_spectrum(int d, RngStream& rng) {
    std::vector<double> p(static_cast<std::size_t>(d));
    double sum = 0.0;
    for (auto& v : p) {
        v = -std::log(rng.next_unit() + 1e-300);
        sum += v;
    }
    for (auto& v : p) v /= sum;
    double s2 = std::accumulate(p.begin(), p.end(), 0.0);
    p[0] += 1.0 - s2;
    return Spectrum(std::move(p));
}

std::vector<int> random_word(int n, int d, RngStream& rng) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (auto& s : w) s = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(d));
    return w;
}

std::vector<Check> build_checks(bool full, std::uint64_t seed) {
    std::vector<Check> checks;

    checks.push_back({"partitions.count-matches-enumeration", [=](std::string& msg) {
        int top = full ? 30 : 20;
        for (int m = 0; m <= top; ++m)
            if (partition_count(m) != BigCount(partitions_of(m).size())) {
                msg = "mismatch at m=" + std::to_string(m);
                return false;
            }
        return true;
    }});

    checks.push_back({"partitions.sum-dim-squared", [=](std::string& msg) {
        int top = full ? 10 : 8;
        for (int n = 1; n <= top; ++n) {
            BigCount acc = 0, fact = 1;
            for (const auto& lam : partitions_of(n)) {
                BigCount f = dim(lam);
                acc += f * f;
            }
            for (int v = 2; v <= n; ++v) fact *= v;
            if (acc != fact) {
                msg = "identity fails at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"partitions.hardy-ramanujan", [](std::string& msg) {
        for (int m = 1; m <= 200; ++m)
            if (static_cast<double>(partition_count(m)) >= std::exp(3.0 * std::sqrt(m))) {
                msg = "bound fails at m=" + std::to_string(m);
                return false;
            }
        return true;
    }});

    checks.push_back({"partitions.rising-power-bound", [=](std::string& msg) {
        int top = full ? 12 : 8;
        for (int m = 1; m <= top; ++m)
            for (const auto& mu : partitions_of(m))
                for (int d = mu.length(); d <= top; ++d)
                    if (rising_power(d, mu) < std::pow(d / std::exp(1.0), m) * (1 - 1e-12)) {
                        msg = "bound fails for mu=" + mu.str() + " d=" + std::to_string(d);
                        return false;
                    }
        return true;
    }});

    checks.push_back({"partitions.prec-count", [=](std::string& msg) {
        int top = full ? 20 : 12;
        for (int m = 2; m <= top; ++m)
            for (const auto& mu : partitions_of(m)) {
                if (m <= 10 &&
                    prec_count(mu) != BigCount(interlacing_predecessors(mu).size())) {
                    msg = "product formula mismatch for mu=" + mu.str();
                    return false;
                }
                if (static_cast<double>(prec_count(mu)) >=
                    std::pow(m, std::sqrt(2.0 * m))) {
                    msg = "prec bound fails for mu=" + mu.str();
                    return false;
                }
            }
        return true;
    }});

    checks.push_back({"symmetric.basis-change", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 11));
        for (int m = 1; m <= 5; ++m)
            for (const auto& mu : partitions_of(m)) {
                std::vector<double> x(4);
                for (auto& v : x) v = rng.next_unit();
                auto [lhs, rhs] = verify_basis_change(mu, x);
                if (!near(lhs, rhs)) {
                    msg = "mismatch for mu=" + mu.str();
                    return false;
                }
            }
        return true;
    }});

    checks.push_back({"symmetric.branching", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 12));
        for (int m = 1; m <= 6; ++m)
            for (const auto& mu : partitions_of(m)) {
                std::vector<double> z(5);
                for (auto& v : z) v = rng.next_unit() + 0.1;
                auto [lhs, rhs] = verify_branching(mu, z);
                if (!near(lhs, rhs)) {
                    msg = "mismatch for mu=" + mu.str();
                    return false;
                }
            }
        return true;
    }});

    checks.push_back({"symmetric.schur-symmetry-homogeneity", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 13));
        for (int rep = 0; rep < (full ? 60 : 20); ++rep) {
            int m = 1 + static_cast<int>(rng.next_u64() % 6);
            auto shapes = partitions_of(m);
            const auto& lam = shapes[rng.next_u64() % shapes.size()];
            std::vector<double> x(5);
            for (auto& v : x) v = 2.0 * rng.next_unit() - 0.5;
            double base = schur_eval(lam, x);
            auto perm = x;
            std::reverse(perm.begin(), perm.end());
            if (!near(schur_eval(lam, perm), base)) {
                msg = "symmetry fails for " + lam.str();
                return false;
            }
            for (double c : {-2.0, 0.5, 3.0}) {
                auto scaled = x;
                for (auto& v : scaled) v *= c;
                if (!near(schur_eval(lam, scaled), std::pow(c, m) * base)) {
                    msg = "homogeneity fails for " + lam.str();
                    return false;
                }
            }
        }
        return true;
    }});

    checks.push_back({"symmetric.schur-ones-agreement", [=](std::string& msg) {
        for (int m = 1; m <= (full ? 8 : 6); ++m)
            for (const auto& lam : partitions_of(m))
                for (int d = 1; d <= (full ? 6 : 4); ++d) {
                    std::vector<double> ones(static_cast<std::size_t>(d), 1.0);
                    if (!near(schur_eval(lam, ones), schur_ones(lam, d), 1e-9)) {
                        msg = "mismatch l=" + lam.str() + " d=" + std::to_string(d);
                        return false;
                    }
                }
        return true;
    }});

    checks.push_back({"symmetric.character-orthogonality", [=](std::string& msg) {
        int top = full ? 6 : 5;
        for (int n = 1; n <= top; ++n) {
            auto shapes = partitions_of(n);
            BigCount fact = 1;
            for (int v = 2; v <= n; ++v) fact *= v;
            for (const auto& a : shapes)
                for (const auto& b : shapes) {
                    BigCount acc = 0;
                    for (const auto& mu : shapes)
                        acc += fact / centralizer_size(mu) * character(a, mu) * character(b, mu);
                    BigCount want = (a == b) ? fact : BigCount(0);
                    if (acc != want) {
                        msg = "orthogonality fails at n=" + std::to_string(n);
                        return false;
                    }
                }
        }
        return true;
    }});

    checks.push_back({"symmetric.psharp-single-cycle-agrees", [=](std::string& msg) {
        int top = full ? 10 : 8;
        for (int n = 1; n <= top; ++n)
            for (const auto& lam : partitions_of(n))
                for (int k = 1; k <= n; ++k)
                    if (!near(p_sharp_single_cycle(k, lam), p_sharp(Partition({k}), lam), 1e-9)) {
                        msg = "mismatch lambda=" + lam.str() + " k=" + std::to_string(k);
                        return false;
                    }
        return true;
    }});

    checks.push_back({"sampling.sw-normalization", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 21));
        int ntop = full ? 8 : 6, dtop = full ? 4 : 3;
        for (int n = 1; n <= ntop; ++n)
            for (int d = 1; d <= dtop; ++d) {
                auto eta = random_spectrum(d, rng);
                auto sw = exact_sw_distribution(eta, n);
                double total = 0.0;
                for (const auto& [lam, p] : sw.table) total += p;
                if (std::abs(total - 1.0) > 1e-9) {
                    msg = "sum != 1 at n=" + std::to_string(n) + " d=" + std::to_string(d);
                    return false;
                }
            }
        return true;
    }});

    checks.push_back({"sampling.unbiased-psharp", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 22));
        int ntop = full ? 8 : 6, rtop = full ? 4 : 3;
        for (int d : {2, 3}) {
            auto eta = random_spectrum(d, rng);
            for (int n = 1; n <= ntop; ++n) {
                auto sw = exact_sw_distribution(eta, n);
                for (int r = 1; r <= rtop; ++r)
                    for (const auto& mu : partitions_of(r)) {
                        double lhs = 0.0;
                        for (const auto& [lam, p] : sw.table) lhs += p * p_sharp(mu, lam);
                        double rhs = static_cast<double>(falling_power(n, r)) *
                                     power_sum_product(eta.probs(), mu);
                        if (std::abs(lhs - rhs) > 1e-8 * std::max(1.0, std::abs(rhs))) {
                            msg = "bias at n=" + std::to_string(n) + " mu=" + mu.str();
                            return false;
                        }
                    }
            }
        }
        return true;
    }});

    checks.push_back({"sampling.eyd-majorizes-empirical", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 23));
        int reps = full ? 10000 : 2000;
        for (int rep = 0; rep < reps; ++rep) {
            int d = 2 + static_cast<int>(rng.next_u64() % 3);
            int n = 5 + static_cast<int>(rng.next_u64() % 40);
            auto w = random_word(n, d, rng);
            auto lam = rsk_shape(w);
            std::vector<int> counts(static_cast<std::size_t>(d), 0);
            for (int s : w) ++counts[static_cast<std::size_t>(s - 1)];
            std::sort(counts.begin(), counts.end(), std::greater<>());
            std::int64_t pl = 0, pc = 0;
            for (int i = 0; i < d; ++i) {
                pl += lam.part(i);
                pc += counts[static_cast<std::size_t>(i)];
                if (pl < pc) {
                    msg = "majorization fails";
                    return false;
                }
            }
        }
        return true;
    }});

    checks.push_back({"estimators.renyi-monotone-in-alpha", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 31));
        int reps = full ? 1000 : 200;
        for (int rep = 0; rep < reps; ++rep) {
            int d = 2 + static_cast<int>(rng.next_u64() % 4);
            int n = 10 + static_cast<int>(rng.next_u64() % 100);
            auto lam = rsk_shape(random_word(n, d, rng));
            double prev = eyd_renyi(lam, 0.25).entropy_estimate;
            for (double a : {0.5, 1.0, 2.0, 3.0, 4.0}) {
                double cur = a == 1.0 ? eyd_von_neumann(lam).entropy_estimate
                                      : eyd_renyi(lam, a).entropy_estimate;
                if (cur > prev + 1e-12) {
                    msg = "monotonicity fails at alpha=" + std::to_string(a);
                    return false;
                }
                prev = cur;
            }
        }
        return true;
    }});

    checks.push_back({"estimators.pinsker-chain", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 32));
        int reps = full ? 2000 : 500;
        for (int rep = 0; rep < reps; ++rep) {
            int d = 2 + static_cast<int>(rng.next_u64() % 4);
            int n = 20 + static_cast<int>(rng.next_u64() % 80);
            auto eta = spectrum_uniform(d);
            auto lam = sample_sw(eta, n, rng);
            auto emp = eyd_distribution(lam, n, d);
            auto dd = distances(emp.probs(), eta.probs());
            double gap = std::log(d) - eyd_von_neumann(lam).entropy_estimate;
            if (std::abs(gap - dd.kl) > 1e-12 * std::max(1.0, dd.kl)) {
                msg = "entropy gap != KL";
                return false;
            }
            if (dd.kl < 2.0 * dd.tv * dd.tv - 1e-12) {
                msg = "Pinsker fails";
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"estimators.entropy-lipschitz", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 33));
        int reps = full ? 10000 : 2000;
        for (int rep = 0; rep < reps; ++rep) {
            int n = rep % 2 ? 30 : 50;
            int d = 2 + static_cast<int>(rng.next_u64() % 3);
            auto w = random_word(n, d, rng);
            auto w2 = w;
            auto pos = static_cast<std::size_t>(rng.next_u64() % w.size());
            w2[pos] = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(d));
            auto l1 = rsk_shape(w);
            auto l2 = rsk_shape(w2);
            double s1 = eyd_von_neumann(l1).entropy_estimate;
            double s2 = eyd_von_neumann(l2).entropy_estimate;
            if (std::abs(s1 - s2) > 15.0 * std::log(n) / n) {
                msg = "Lipschitz bound fails at n=" + std::to_string(n);
                return false;
            }
            std::int64_t c1 = 0, c2 = 0;
            for (int i = 0; i < std::max(l1.length(), l2.length()); ++i) {
                c1 += l1.part(i);
                c2 += l2.part(i);
                if (std::llabs(c1 - c2) > 1) {
                    msg = "cumulative row sums move by more than 1";
                    return false;
                }
            }
            if (std::abs(z_statistic(l1, n, d) - z_statistic(l2, n, d)) > 14.0 / n) {
                msg = "Z lipschitz fails";
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"analysis.distance-chain", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 41));
        int reps = full ? 10000 : 2000;
        for (int rep = 0; rep < reps; ++rep) {
            int d = 2 + static_cast<int>(rng.next_u64() % 15);
            auto p = random_spectrum(d, rng);
            auto q = random_spectrum(d, rng);
            auto dd = distances(p.probs(), q.probs());
            if (2.0 * dd.tv * dd.tv > dd.kl + 1e-9 || dd.kl > dd.chisq + 1e-9) {
                msg = "chain fails";
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"analysis.moment-inequalities", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 42));
        int reps = full ? 1000 : 300;
        const double grid[] = {0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0};
        for (int rep = 0; rep < reps; ++rep) {
            int d = 2 + static_cast<int>(rng.next_u64() % 63);
            auto eta = random_spectrum(d, rng);
            auto M = [&](double a) { return power_sum(eta.probs(), a); };
            const double slack = 1e-9;
            for (double a : grid) {
                double ma = M(a);
                if (a < 1 && (ma < 1 - slack || ma > std::pow(d, 1 - a) + slack)) {
                    msg = "(i) fails small alpha";
                    return false;
                }
                if (a > 1 && (ma < std::pow(d, 1 - a) - slack || ma > 1 + slack)) {
                    msg = "(i) fails large alpha";
                    return false;
                }
                if (M(2 * a) > ma * ma + slack) {
                    msg = "(iii) fails";
                    return false;
                }
                for (double b : grid) {
                    if (a > 0 && M(a + b) > std::pow(ma, (a + b) / a) + slack) {
                        msg = "(ii) fails";
                        return false;
                    }
                    if (b <= a) {
                        if (M(a - b) > std::pow(d, b / a) * std::pow(ma, (a - b) / a) + slack) {
                            msg = "(iv) fails";
                            return false;
                        }
                        if (a >= 1) {
                            if (M(a + b) >
                                std::pow(d, (a - 1) * (a - b) / a) * ma * ma + slack) {
                                msg = "(v) first fails";
                                return false;
                            }
                            if (M(a - b) > std::pow(d, b) * ma + slack) {
                                msg = "(v) second fails";
                                return false;
                            }
                        }
                    }
                }
            }
        }
        return true;
    }});

    checks.push_back({"analysis.muirhead", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 43));
        int mtop = full ? 8 : 6;
        for (int rep = 0; rep < (full ? 200 : 50); ++rep) {
            int d = 2 + static_cast<int>(rng.next_u64() % 6);
            auto eta = random_spectrum(d, rng);
            for (int m = 2; m <= mtop; ++m)
                for (const auto& mu : partitions_of(m))
                    for (const auto& nu : partitions_of(m))
                        // The product form needs equal lengths: (2) majorizes
                        // (1,1) yet M_2 < M_1^2.
                        if (mu.length() == nu.length() && majorizes(mu, nu) &&
                            power_sum_product(eta.probs(), mu) <
                                power_sum_product(eta.probs(), nu) - 1e-12) {
                            msg = "Muirhead fails " + mu.str() + " vs " + nu.str();
                            return false;
                        }
        }
        return true;
    }});

    checks.push_back({"analysis.length-partition", [=](std::string& msg) {
        int atop = full ? 6 : 5;
        for (int alpha = 2; alpha <= atop; ++alpha)
            for (int j = 0; j < alpha; ++j)
                for (const auto& mu : variance_partition_set(alpha, j)) {
                    if (mu.size() != alpha + j) {
                        msg = "size != alpha+j";
                        return false;
                    }
                    if (mu.length() > alpha - j) {
                        msg = "length bound fails alpha=" + std::to_string(alpha) +
                              " j=" + std::to_string(j) + " mu=" + mu.str();
                        return false;
                    }
                }
        return true;
    }});

    checks.push_back({"analysis.tv-moment-gap", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 44));
        int reps = full ? 10000 : 2000;
        for (int rep = 0; rep < reps; ++rep) {
            int d = 2 + static_cast<int>(rng.next_u64() % 31);
            auto p = random_spectrum(d, rng);
            for (double a : {0.25, 0.5, 0.75})
                if (!tv_moment_gap_check(p.probs(), a)) {
                    msg = "inequality fails";
                    return false;
                }
        }
        return true;
    }});

    checks.push_back({"analysis.p2-bound", [=](std::string& msg) {
        RngStream rng(derive_seed(seed, 45));
        for (int d : {4, 10, 16}) {
            double m = p2_bound_check(d, full ? 100000 : 20000, rng);
            if (m > 16.0 / std::exp(1.0) * std::sqrt(d)) {
                msg = "P2 bound fails at d=" + std::to_string(d);
                return false;
            }
        }
        return true;
    }});

    checks.push_back({"analysis.wright-vs-direct", [=](std::string& msg) {
        int ntop = full ? 5 : 4, dtop = full ? 3 : 2;
        for (int d = 2; d <= dtop; ++d) {
            std::vector<std::vector<double>> xs;
            double b1 = 0.4;
            xs.push_back(std::vector<double>(static_cast<std::size_t>(d), 0.0));
            std::vector<double> lb(static_cast<std::size_t>(d), -b1 / (d - 1));
            lb[0] = b1;
            xs.push_back(lb);
            for (int n = 2; n <= ntop; ++n)
                for (const auto& x : xs) {
                    std::vector<double> ep(x.size());
                    for (std::size_t i = 0; i < x.size(); ++i) ep[i] = (1.0 + x[i]) / d;
                    auto eta = Spectrum(ep);
                    auto direct =
                        distances(exact_sw_distribution(eta, n),
                                  exact_sw_distribution(spectrum_uniform(d), n));
                    auto w = wright_chisq(x, n, d, n);
                    if (std::abs(w.sum - direct.chisq) >
                        1e-8 * std::max(1.0, direct.chisq)) {
                        msg = "mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d);
                        return false;
                    }
                }
        }
        return true;
    }});

    if (full) {
        checks.push_back({"sampling.gof-distribution-match", [=](std::string& msg) {
            struct Case {
                int n;
                Spectrum eta;
            };
            std::vector<Case> cases;
            cases.push_back({4, spectrum_uniform(2)});
            cases.push_back({4, Spectrum({0.7, 0.3})});
            cases.push_back({5, spectrum_uniform(3)});
            cases.push_back({5, Spectrum({0.6, 0.3, 0.1})});
            cases.push_back({5, Spectrum({0.1, 0.6, 0.3})});  // ordering invariance
            int caseno = 0;
            for (const auto& c : cases) {
                ++caseno;
                std::vector<double> sorted(c.eta.probs().begin(), c.eta.probs().end());
                std::sort(sorted.begin(), sorted.end(), std::greater<>());
                auto sw = exact_sw_distribution(Spectrum(sorted), c.n);
                std::vector<Partition> keys;
                std::vector<double> expected;
                for (const auto& [lam, p] : sw.table) {
                    keys.push_back(lam);
                    expected.push_back(p);
                }
                std::vector<std::int64_t> counts(keys.size(), 0);
                const int trials = 200000;
                RngStream rng(derive_seed(seed, 51, static_cast<std::uint64_t>(caseno)));
                for (int t = 0; t < trials; ++t) {
                    auto lam = sample_sw(c.eta, c.n, rng);
                    auto it = std::lower_bound(keys.begin(), keys.end(), lam);
                    ++counts[static_cast<std::size_t>(it - keys.begin())];
                }
                double p = chi_square_gof_pvalue(counts, expected);
                if (p <= 1e-3) {
                    msg = "GOF rejects case " + std::to_string(caseno) +
                          " (p=" + csv_double(p) + ")";
                    return false;
                }
            }
            return true;
        }});
    }

    return checks;
}

}  // namespace

int run_selftest(const ExperimentConfig& cfg, std::ostream& os) {
    const bool full = cfg.selftest_level == "full";
    int failures = 0;
    for (auto& check : build_checks(full, cfg.seed)) {
        std::string msg;
        bool ok = false;
        try {
            ok = check.run(msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        if (ok) {
            os << "ok   " << check.name << "\n";
        } else {
            os << "FAIL " << check.name << (msg.empty() ? "" : "  (" + msg + ")") << "\n";
            ++failures;
        }
    }
    os << (failures ? "selftest: FAILED (" + std::to_string(failures) + ")" : "selftest: all ok")
       << "\n";
    return failures ? 1 : 0;
}

}  // namespace schurweyl
