#ifndef RECON_EXPERIMENT_HPP
#define RECON_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "recon/channel.hpp"
#include "recon/parity_check_code.hpp"

namespace recon {

// Flat key=value experiment description. Recognized keys:
//   alist, n, col_degree, row_degree, code_seed, rank_check   (code source)
//   delta, grid, f_eff, f_table                               (plan source)
//   frames, seed, t, out, decoder_iters                       (run control)
//   fer_target, f_ceiling                                     (calibrate)
//   length                                                    (cascade)
// grid is "start:stop:step" or a comma list. '#' starts a comment.
struct ExperimentConfig {
    std::string alist_path;
    std::size_t n = 0;
    unsigned col_degree = 0;
    unsigned row_degree = 0;
    std::uint64_t code_seed = 1;
    bool rank_check = true;

    double delta = 0.0;
    std::vector<double> grid;
    double f_eff = 0.0;         // constant efficiency when > 0
    std::string f_table_path;   // calibration table otherwise

    std::size_t frames = 100;
    std::uint64_t seed = 1;
    double t = 0.0;
    std::string out_path;
    std::size_t decoder_iters = 200;

    double fer_target = 0.05;
    double f_ceiling = 3.0;

    std::size_t length = 10000;
};

ExperimentConfig parse_config(std::istream& in, const std::string& name);
ExperimentConfig parse_config_file(const std::string& path);

// Applies one "key=value" override on top of a parsed config.
void apply_override(ExperimentConfig& config, const std::string& key,
                    const std::string& value);

std::vector<double> parse_grid(const std::string& text);

ParityCheckCode load_code(const ExperimentConfig& config);

// Calibration table "p_err f" per line, f = "inf" for unreachable points.
// Lookup interpolates linearly and clamps outside the tabulated range;
// any unreachable neighbor makes the lookup unreachable too.
struct FTable {
    std::vector<std::pair<double, double>> points;  // f = +inf marks unreachable
};

FTable load_f_table(std::istream& in, const std::string& name);
double f_lookup(const FTable& table, double p_err);

std::vector<SweepPoint> run_sweep(const ParityCheckCode& code,
                                  const ExperimentConfig& config);
void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& rows,
                     double t);

std::vector<CalibrationPoint> run_calibrate(const ParityCheckCode& code,
                                            const ExperimentConfig& config);
void write_f_table(std::ostream& out, const std::vector<CalibrationPoint>& curve);

struct CascadePoint {
    double p_err = 0.0;
    std::size_t length = 0;
    std::size_t frames = 0;
    std::size_t frame_errors = 0;  // frames left with residual errors
    double fer = 0.0;
    double mean_leak_bits = 0.0;
    double f_orig = 0.0;           // mean_leak / (length * h(p_err))
    std::uint64_t master_seed = 0;
};

std::vector<CascadePoint> run_cascade(const ExperimentConfig& config);
void write_cascade_csv(std::ostream& out, const std::vector<CascadePoint>& rows,
                       double t);

std::string key_budget_report(double h_min_prior, std::size_t n, std::size_t k,
                              std::size_t s, std::size_t p, double t);

} // namespace recon

#endif // RECON_EXPERIMENT_HPP
