#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "schurweyl/harness.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<std::int64_t> parse_int64_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"schurweyl: weak Schur sampling simulator and entropy estimators"};
    app.require_subcommand(1);

    schurweyl::ExperimentConfig cfg;
    std::string d_list = "8";
    std::string n_list = "1000";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "Renyi order (1 = von Neumann)");
        sub->add_option("--d", d_list, "dimension grid, comma separated");
        sub->add_option("--n", n_list, "copy-count grid, comma separated");
        sub->add_option("--eps", cfg.eps, "additive entropy accuracy");
        sub->add_option("--trials", cfg.trials, "trials per grid cell");
        sub->add_option("--seed", cfg.seed, "root seed");
        sub->add_option("--spectrum", cfg.spectrum,
                        "uniform|zipf|lb-int|lb-small or a probability file");
        sub->add_option("--out", cfg.out, "output CSV path (default stdout)");
        sub->add_option("--threads", cfg.threads, "worker threads");
    };

    auto* est = app.add_subcommand("estimate", "one seeded estimator run");
    add_common(est);
    auto* sweep = app.add_subcommand("sweep", "grid x trials sweep with summary");
    add_common(sweep);
    auto* lb = app.add_subcommand("lowerbound", "two-point testing curves vs uniform");
    add_common(lb);
    lb->add_option("--max-size", cfg.wright_max_size, "chi^2 series truncation size");
    auto* st = app.add_subcommand("selftest", "invariant battery");
    st->add_option("level", cfg.selftest_level, "quick|full");
    st->add_option("--seed", cfg.seed, "root seed");
    st->add_option("--out", cfg.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0, parse errors are config errors
    }

    try {
        cfg.d_grid = parse_int_list(d_list);
        cfg.n_grid = parse_int64_list(n_list);
        if (est->parsed()) cfg.mode = "estimate";
        if (sweep->parsed()) cfg.mode = "sweep";
        if (lb->parsed()) cfg.mode = "lowerbound";
        if (st->parsed()) cfg.mode = "selftest";
        cfg.validate();

        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!cfg.out.empty()) {
            file.open(cfg.out);
            if (!file) throw std::invalid_argument("cannot open output file: " + cfg.out);
            os = &file;
        }
        if (cfg.mode == "estimate") return schurweyl::run_estimate(cfg, *os);
        if (cfg.mode == "sweep") return schurweyl::run_sweep(cfg, *os);
        if (cfg.mode == "lowerbound") return schurweyl::run_lowerbound(cfg, *os);
        return schurweyl::run_selftest(cfg, *os);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (...) {
        std::cerr << "error: unknown failure\n";
        return 2;
    }
}
