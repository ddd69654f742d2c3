#include "schurweyl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <boost/math/special_functions/gamma.hpp>

#include "schurweyl/analysis.hpp"

namespace schurweyl {

void ExperimentConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (!(eps > 0)) throw std::invalid_argument("config: eps must be > 0");
    if (mode != "selftest") {
        if (d_grid.empty()) throw std::invalid_argument("config: d grid is empty");
        if (n_grid.empty()) throw std::invalid_argument("config: n grid is empty");
        for (int d : d_grid)
            if (d < 1) throw std::invalid_argument("config: d must be >= 1");
        for (std::int64_t n : n_grid)
            if (n < 1) throw std::invalid_argument("config: n must be >= 1");
        const bool integral = alpha == std::floor(alpha);
        if (integral && alpha >= 2)
            for (std::int64_t n : n_grid)
                if (n < static_cast<std::int64_t>(alpha))
                    throw std::invalid_argument("config: integral alpha needs n >= alpha");
    }
    if (!(alpha > 0)) throw std::invalid_argument("config: alpha must be > 0");
    if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
    if (selftest_level != "quick" && selftest_level != "full")
        throw std::invalid_argument("config: selftest level must be quick or full");
}

Spectrum make_spectrum(const std::string& source, int d, double eps, double alpha) {
    if (source == "uniform") return spectrum_uniform(d);
    if (source == "zipf") return spectrum_zipf(d);
    if (source == "lb-int") return spectrum_integral_lb(d, eps, alpha);
    if (source == "lb-small") return spectrum_small_alpha_lb(d, eps, alpha);
    Spectrum s = load_spectrum_file(source);
    if (d > 0 && s.dimension() != d)
        throw std::invalid_argument("spectrum file dimension does not match --d");
    return s;
}

EstimateReport single_run(const Spectrum& eta, std::int64_t n, double alpha, std::uint64_t seed) {
    RngStream rng(seed);
    Partition shape = sample_sw(eta, n, rng);
    if (alpha == 1.0) return eyd_von_neumann(shape);
    if (alpha == std::floor(alpha) && alpha >= 2.0)
        return integral_renyi_estimate(shape, static_cast<int>(alpha));
    return eyd_renyi(shape, alpha);
}

namespace {

// Runs fn(i) for i in [0, count) on `threads` workers.
void parallel_for(std::int64_t count, int threads, const std::function<void(std::int64_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::int64_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace

double success_fraction(const Spectrum& eta, std::int64_t n, double alpha, double eps,
                        double true_value, int trials, std::uint64_t seed, int threads) {
    std::vector<char> ok(static_cast<std::size_t>(trials), 0);
    parallel_for(trials, threads, [&](std::int64_t t) {
        auto rep = single_run(eta, n, alpha, derive_seed(seed, static_cast<std::uint64_t>(t)));
        ok[static_cast<std::size_t>(t)] =
            rep.valid && std::abs(rep.entropy_estimate - true_value) <= eps;
    });
    return static_cast<double>(std::count(ok.begin(), ok.end(), 1)) / trials;
}

std::int64_t find_threshold_n(const std::function<double(std::int64_t, std::uint64_t)>& frac_at,
                              std::uint64_t seed, const ThresholdOptions& opt) {
    std::uint64_t probe = 0;
    auto probe_frac = [&](std::int64_t n) { return frac_at(n, derive_seed(seed, probe++)); };
    std::int64_t lo = opt.n_min;
    std::int64_t hi = opt.n_min;
    // Doubling bracket.
    while (probe_frac(hi) < opt.target) {
        lo = hi;
        hi *= 2;
        if (hi > opt.n_max)
            throw std::runtime_error("find_threshold_n: target not reached below n_max");
    }
    if (hi == opt.n_min) return hi;  // already succeeding at the smallest n
    // Geometric bisection on the bracket.
    while (hi - lo > 1 &&
           static_cast<double>(hi) > static_cast<double>(lo) * (1.0 + opt.bisect_rel)) {
        auto mid = static_cast<std::int64_t>(
            std::llround(std::sqrt(static_cast<double>(lo) * static_cast<double>(hi))));
        mid = std::clamp(mid, lo + 1, hi - 1);
        if (probe_frac(mid) >= opt.target)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::int64_t threshold_copies(const Spectrum& eta, double alpha, double eps, std::uint64_t seed,
                              const ThresholdOptions& opt, int threads) {
    const double truth = true_entropy(eta, alpha);
    ThresholdOptions local = opt;
    if (alpha == std::floor(alpha) && alpha >= 2.0)
        local.n_min = std::max<std::int64_t>(local.n_min, static_cast<std::int64_t>(alpha));
    auto frac = [&](std::int64_t n, std::uint64_t probe_seed) {
        return success_fraction(eta, n, alpha, eps, truth, local.trials_per_probe, probe_seed,
                                threads);
    };
    return find_threshold_n(frac, seed, local);
}

WilsonInterval wilson_interval(int successes, int trials) {
    if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be >= 1");
    const double z = 1.96;
    const double nd = trials;
    const double phat = static_cast<double>(successes) / nd;
    const double denom = 1.0 + z * z / nd;
    const double center = phat + z * z / (2.0 * nd);
    const double margin = z * std::sqrt(phat * (1.0 - phat) / nd + z * z / (4.0 * nd * nd));
    return {(center - margin) / denom, (center + margin) / denom};
}

double chi_square_gof_pvalue(std::span<const std::int64_t> observed,
                             std::span<const double> expected, double min_expected) {
    if (observed.size() != expected.size() || observed.empty())
        throw std::invalid_argument("chi_square_gof_pvalue: bin mismatch");
    const double total =
        static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::int64_t{0}));
    // Pool bins whose expected count is below the floor.
    std::vector<double> exp_counts;
    std::vector<double> obs_counts;
    double pool_exp = 0.0, pool_obs = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double e = expected[i] * total;
        if (e < min_expected) {
            pool_exp += e;
            pool_obs += static_cast<double>(observed[i]);
        } else {
            exp_counts.push_back(e);
            obs_counts.push_back(static_cast<double>(observed[i]));
        }
    }
    if (pool_exp > 0.0) {
        exp_counts.push_back(pool_exp);
        obs_counts.push_back(pool_obs);
    }
    if (exp_counts.size() < 2) return 1.0;
    double stat = 0.0;
    for (std::size_t i = 0; i < exp_counts.size(); ++i) {
        double diff = obs_counts[i] - exp_counts[i];
        stat += diff * diff / exp_counts[i];
    }
    const double dof = static_cast<double>(exp_counts.size()) - 1.0;
    return boost::math::gamma_q(dof / 2.0, stat / 2.0);
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_slope: need matching series of length >= 2");
    const double n = static_cast<double>(x.size());
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void write_metadata(const ExperimentConfig& cfg, std::ostream& os) {
    os << "# schurweyl 1.0\n";
    os << "# mode=" << cfg.mode << " alpha=" << csv_double(cfg.alpha)
       << " eps=" << csv_double(cfg.eps) << " trials=" << cfg.trials << " seed=" << cfg.seed
       << " spectrum=" << cfg.spectrum << "\n";
    os << "# d_grid=";
    for (std::size_t i = 0; i < cfg.d_grid.size(); ++i) os << (i ? "," : "") << cfg.d_grid[i];
    os << " n_grid=";
    for (std::size_t i = 0; i < cfg.n_grid.size(); ++i) os << (i ? "," : "") << cfg.n_grid[i];
    os << "\n";
}

void write_row(std::ostream& os, const SweepRow& row) {
    os << row.experiment << ',' << csv_double(row.alpha) << ',' << row.d << ',' << row.n << ','
       << row.trial << ',' << row.seed << ',' << csv_double(row.estimate) << ','
       << csv_double(row.true_value) << ',' << csv_double(row.abs_error) << ','
       << int(row.valid) << ',' << int(row.success) << '\n';
}

constexpr const char* kRowHeader =
    "experiment,alpha,d,n,trial,seed,estimate,true_value,abs_error,valid,success";

std::vector<Spectrum> resolve_spectra(const ExperimentConfig& cfg) {
    std::vector<Spectrum> out;
    out.reserve(cfg.d_grid.size());
    for (int d : cfg.d_grid) out.push_back(make_spectrum(cfg.spectrum, d, cfg.eps, cfg.alpha));
    return out;
}

std::vector<SweepRow> run_cells(const ExperimentConfig& cfg, const std::vector<Spectrum>& spectra,
                                const std::string& name) {
    std::vector<SweepRow> rows(cfg.d_grid.size() * cfg.n_grid.size() *
                               static_cast<std::size_t>(cfg.trials));
    for (std::size_t di = 0; di < cfg.d_grid.size(); ++di) {
        const int d = cfg.d_grid[di];
        const Spectrum& eta = spectra[di];
        const double truth = true_entropy(eta, cfg.alpha);
        for (std::size_t ni = 0; ni < cfg.n_grid.size(); ++ni) {
            const std::int64_t n = cfg.n_grid[ni];
            const std::uint64_t cell = di * cfg.n_grid.size() + ni;
            const std::size_t base = (di * cfg.n_grid.size() + ni) *
                                     static_cast<std::size_t>(cfg.trials);
            parallel_for(cfg.trials, cfg.threads, [&, base](std::int64_t t) {
                const std::uint64_t s = derive_seed(cfg.seed, cell, static_cast<std::uint64_t>(t));
                auto rep = single_run(eta, n, cfg.alpha, s);
                SweepRow row;
                row.experiment = name;
                row.alpha = cfg.alpha;
                row.d = d;
                row.n = n;
                row.trial = static_cast<int>(t);
                row.seed = s;
                row.estimate = rep.entropy_estimate;
                row.true_value = truth;
                row.abs_error = std::abs(rep.entropy_estimate - truth);
                row.valid = rep.valid;
                row.success = rep.valid && row.abs_error <= cfg.eps;
                rows[base + static_cast<std::size_t>(t)] = std::move(row);
            });
        }
    }
    return rows;
}

}  // namespace

int run_estimate(const ExperimentConfig& cfg, std::ostream& os) {
    ExperimentConfig one = cfg;
    one.d_grid = {cfg.d_grid.front()};
    one.n_grid = {cfg.n_grid.front()};
    one.trials = 1;
    auto spectra = resolve_spectra(one);
    write_metadata(one, os);
    os << kRowHeader << '\n';
    for (const auto& row : run_cells(one, spectra, "estimate")) write_row(os, row);
    return 0;
}

int run_sweep(const ExperimentConfig& cfg, std::ostream& os) {
    auto spectra = resolve_spectra(cfg);
    write_metadata(cfg, os);
    os << kRowHeader << '\n';
    auto rows = run_cells(cfg, spectra, "sweep");
    for (const auto& row : rows) write_row(os, row);
    os << "# summary\n";
    os << "experiment,alpha,d,n,successes,trials,success_frac,wilson_lo,wilson_hi\n";
    for (std::size_t di = 0; di < cfg.d_grid.size(); ++di)
        for (std::size_t ni = 0; ni < cfg.n_grid.size(); ++ni) {
            const std::size_t base = (di * cfg.n_grid.size() + ni) *
                                     static_cast<std::size_t>(cfg.trials);
            int successes = 0;
            for (int t = 0; t < cfg.trials; ++t)
                successes += rows[base + static_cast<std::size_t>(t)].success;
            auto w = wilson_interval(successes, cfg.trials);
            os << "summary," << csv_double(cfg.alpha) << ',' << cfg.d_grid[di] << ','
               << cfg.n_grid[ni] << ',' << successes << ',' << cfg.trials << ','
               << csv_double(static_cast<double>(successes) / cfg.trials) << ','
               << csv_double(w.lo) << ',' << csv_double(w.hi) << '\n';
        }
    return 0;
}

int run_lowerbound(const ExperimentConfig& cfg, std::ostream& os) {
    const int d = cfg.d_grid.front();
    const Spectrum eta = make_spectrum(cfg.spectrum, d, cfg.eps, cfg.alpha);
    if (eta.dimension() != d)
        throw std::invalid_argument("lowerbound: spectrum dimension must equal d");
    const Spectrum nu = spectrum_uniform(d);
    std::vector<double> x(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = d * eta.entry(i) - 1.0;
    const double s_eta = true_entropy(eta, cfg.alpha);
    const double s_nu = true_entropy(nu, cfg.alpha);
    write_metadata(cfg, os);
    os << "n,pe,pe_kind,chisq_wright,chisq_last_layer\n";
    for (std::int64_t n : cfg.n_grid) {
        double pe;
        const char* kind;
        if (n <= 12) {
            pe = two_point_error(eta, nu, static_cast<int>(n));
            kind = "exact";
        } else {
            // Error rate of the nearest-entropy classifier; an upper bound on
            // the Bayes error. Invalid runs vote for the flatter spectrum.
            const std::int64_t votes = std::int64_t{2} * cfg.trials;
            std::vector<char> wrong(static_cast<std::size_t>(votes), 0);
            parallel_for(votes, cfg.threads, [&](std::int64_t t) {
                const bool from_eta = t % 2 == 0;
                auto rep = single_run(from_eta ? eta : nu, n, cfg.alpha,
                                      derive_seed(cfg.seed, static_cast<std::uint64_t>(n),
                                                  static_cast<std::uint64_t>(t)));
                bool guess_eta = false;
                if (rep.valid)
                    guess_eta = std::abs(rep.entropy_estimate - s_eta) <
                                std::abs(rep.entropy_estimate - s_nu);
                else
                    guess_eta = s_eta > s_nu;
                wrong[static_cast<std::size_t>(t)] = guess_eta != from_eta;
            });
            pe = static_cast<double>(std::count(wrong.begin(), wrong.end(), 1)) /
                 static_cast<double>(votes);
            kind = "empirical";
        }
        auto w = wright_chisq(x, n, d, cfg.wright_max_size);
        os << n << ',' << csv_double(pe) << ',' << kind << ',' << csv_double(w.sum) << ','
           << csv_double(w.last_layer) << '\n';
    }
    return 0;
}

}  // namespace schurweyl
