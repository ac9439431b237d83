#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "recon/errors.hpp"
#include "recon/experiment.hpp"

namespace {

struct CommonOpts {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> frames;
    std::optional<double> delta;
    std::optional<double> f_eff;
    std::optional<double> t;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config, "experiment config file (key=value)");
    cmd->add_option("--out", opts.out, "output path (default stdout)");
    cmd->add_option("--seed", opts.seed, "master seed");
    cmd->add_option("--frames", opts.frames, "frames per grid point");
    cmd->add_option("--delta", opts.delta, "adaptable fraction of positions");
    cmd->add_option("--f-eff", opts.f_eff, "constant target efficiency");
    cmd->add_option("--t", opts.t, "security parameter t, bits");
}

recon::ExperimentConfig build_config(const CommonOpts& opts) {
    recon::ExperimentConfig config;
    if (!opts.config.empty()) config = recon::parse_config_file(opts.config);
    if (opts.seed) config.seed = *opts.seed;
    if (opts.frames) config.frames = *opts.frames;
    if (!opts.out.empty()) config.out_path = opts.out;
    if (opts.delta) config.delta = *opts.delta;
    if (opts.f_eff) {
        config.f_eff = *opts.f_eff;
        config.f_table_path.clear();
    }
    if (opts.t) config.t = *opts.t;
    return config;
}

// Writes through a file when the config names one, stdout otherwise.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(std::cout);
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << '\n';
        return 1;
    }
    body(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rate-adaptive information reconciliation experiments"};
    app.require_subcommand(1);

    CommonOpts sweep_opts, calib_opts, cascade_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "FER/efficiency sweep over a p_err grid");
    add_common(sweep, sweep_opts);
    CLI::App* calibrate = app.add_subcommand("calibrate", "find minimal f_eff per grid point");
    add_common(calibrate, calib_opts);
    CLI::App* cascade = app.add_subcommand("cascade", "interactive-protocol baseline sweep");
    add_common(cascade, cascade_opts);

    double kb_hmin = -1.0, kb_t = 0.0;
    std::size_t kb_n = 0, kb_k = 0, kb_s = 0, kb_p = 0;
    CLI::App* keybudget = app.add_subcommand("keybudget", "min-entropy leakage budget for a plan");
    keybudget->add_option("--n", kb_n, "code length")->required();
    keybudget->add_option("--k", kb_k, "code dimension")->required();
    keybudget->add_option("--s", kb_s, "shortened count")->required();
    keybudget->add_option("--p", kb_p, "punctured count")->required();
    keybudget->add_option("--hmin", kb_hmin,
                          "prior min-entropy (default: payload length)");
    keybudget->add_option("--t", kb_t, "security parameter t, bits");

    std::string alist_path;
    bool skip_rank = false;
    CLI::App* alist_check = app.add_subcommand("alist-check", "validate an alist file");
    alist_check->add_option("path", alist_path, "alist file")->required();
    alist_check->add_flag("--skip-rank", skip_rank, "skip the GF(2) rank check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            recon::ExperimentConfig config = build_config(sweep_opts);
            recon::ParityCheckCode code = recon::load_code(config);
            auto rows = recon::run_sweep(code, config);
            return with_output(config.out_path, [&](std::ostream& out) {
                recon::write_sweep_csv(out, rows, config.t);
            });
        }
        if (calibrate->parsed()) {
            recon::ExperimentConfig config = build_config(calib_opts);
            recon::ParityCheckCode code = recon::load_code(config);
            auto curve = recon::run_calibrate(code, config);
            return with_output(config.out_path, [&](std::ostream& out) {
                recon::write_f_table(out, curve);
            });
        }
        if (cascade->parsed()) {
            recon::ExperimentConfig config = build_config(cascade_opts);
            auto rows = recon::run_cascade(config);
            return with_output(config.out_path, [&](std::ostream& out) {
                recon::write_cascade_csv(out, rows, config.t);
            });
        }
        if (keybudget->parsed()) {
            double hmin = kb_hmin >= 0.0
                              ? kb_hmin
                              : static_cast<double>(kb_n - kb_p - kb_s);
            std::cout << recon::key_budget_report(hmin, kb_n, kb_k, kb_s, kb_p, kb_t);
            return 0;
        }
        if (alist_check->parsed()) {
            std::ifstream in(alist_path);
            if (!in) {
                std::cerr << "error: cannot open " << alist_path << '\n';
                return 1;
            }
            recon::ParityCheckCode code = recon::load_alist(
                in, skip_rank ? recon::RankCheck::skip : recon::RankCheck::verify);
            std::cout << "n            " << code.length() << '\n'
                      << "rows         " << code.rows() << '\n'
                      << "k            " << code.dimension() << '\n'
                      << "base_rate    " << code.base_rate().str() << '\n'
                      << "edges        " << code.edge_count() << '\n'
                      << "fingerprint  " << std::hex << code.fingerprint() << '\n';
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
