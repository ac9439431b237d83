#include "recon/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "recon/accounting.hpp"
#include "recon/cascade.hpp"
#include "recon/entropy.hpp"
#include "recon/errors.hpp"
#include "recon/rng.hpp"

namespace recon {

namespace {

std::string trim(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

bool parse_bool(const std::string& value) {
    if (value == "on" || value == "true" || value == "1") return true;
    if (value == "off" || value == "false" || value == "0") return false;
    throw ParseError("config: boolean must be on/off, got '" + value + "'");
}

double parse_real(const std::string& value) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("config: bad number '" + value + "'");
    }
}

std::uint64_t parse_unsigned(const std::string& value) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("config: bad count '" + value + "'");
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void validate_grid(const std::vector<double>& grid) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0 && grid[i] < 0.5))
            throw DomainError("config: grid point outside (0, 0.5)");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw DomainError("config: grid must be strictly increasing");
    }
}

} // namespace

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        std::istringstream in(text);
        std::string a, b, c;
        if (!std::getline(in, a, ':') || !std::getline(in, b, ':') ||
            !std::getline(in, c))
            throw ParseError("config: grid range needs start:stop:step");
        double start = parse_real(trim(a));
        double stop = parse_real(trim(b));
        double step = parse_real(trim(c));
        if (!(step > 0.0)) throw ParseError("config: grid step must be positive");
        if (stop < start) throw ParseError("config: grid stop before start");
        auto count = static_cast<std::size_t>(
            std::floor((stop - start) / step + 1e-9));
        for (std::size_t i = 0; i <= count; ++i)
            grid.push_back(start + static_cast<double>(i) * step);
    } else {
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            item = trim(item);
            if (!item.empty()) grid.push_back(parse_real(item));
        }
    }
    return grid;
}

void apply_override(ExperimentConfig& config, const std::string& key,
                    const std::string& value) {
    if (key == "alist") config.alist_path = value;
    else if (key == "n") config.n = parse_unsigned(value);
    else if (key == "col_degree") config.col_degree = static_cast<unsigned>(parse_unsigned(value));
    else if (key == "row_degree") config.row_degree = static_cast<unsigned>(parse_unsigned(value));
    else if (key == "code_seed") config.code_seed = parse_unsigned(value);
    else if (key == "rank_check") config.rank_check = parse_bool(value);
    else if (key == "delta") config.delta = parse_real(value);
    else if (key == "grid") config.grid = parse_grid(value);
    else if (key == "f_eff") config.f_eff = parse_real(value);
    else if (key == "f_table") config.f_table_path = value;
    else if (key == "frames") config.frames = parse_unsigned(value);
    else if (key == "seed") config.seed = parse_unsigned(value);
    else if (key == "t") config.t = parse_real(value);
    else if (key == "out") config.out_path = value;
    else if (key == "decoder_iters") config.decoder_iters = parse_unsigned(value);
    else if (key == "fer_target") config.fer_target = parse_real(value);
    else if (key == "f_ceiling") config.f_ceiling = parse_real(value);
    else if (key == "length") config.length = parse_unsigned(value);
    else throw ParseError("config: unknown key '" + key + "'");
}

ExperimentConfig parse_config(std::istream& in, const std::string& name) {
    ExperimentConfig config;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(name + " line " + std::to_string(lineno) +
                             ": expected key=value");
        try {
            apply_override(config, trim(line.substr(0, eq)),
                           trim(line.substr(eq + 1)));
        } catch (const ParseError& err) {
            throw ParseError(name + " line " + std::to_string(lineno) + ": " +
                             err.what());
        }
    }
    return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file " + path);
    return parse_config(in, path);
}

ParityCheckCode load_code(const ExperimentConfig& config) {
    if (!config.alist_path.empty()) {
        std::ifstream in(config.alist_path);
        if (!in) throw Error("cannot open alist file " + config.alist_path);
        return load_alist(in, config.rank_check ? RankCheck::verify : RankCheck::skip);
    }
    if (config.n == 0 || config.col_degree == 0 || config.row_degree == 0)
        throw DomainError("config: need either alist or n/col_degree/row_degree");
    return generate_gallager(config.n, config.col_degree, config.row_degree,
                             config.code_seed);
}

FTable load_f_table(std::istream& in, const std::string& name) {
    FTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string p_text, f_text;
        if (!(fields >> p_text >> f_text))
            throw ParseError(name + " line " + std::to_string(lineno) +
                             ": expected 'p_err f'");
        double p = parse_real(p_text);
        double f = f_text == "inf" ? std::numeric_limits<double>::infinity()
                                   : parse_real(f_text);
        if (!table.points.empty() && p <= table.points.back().first)
            throw ParseError(name + " line " + std::to_string(lineno) +
                             ": p_err not increasing");
        table.points.emplace_back(p, f);
    }
    if (table.points.empty()) throw ParseError(name + ": empty efficiency table");
    return table;
}

double f_lookup(const FTable& table, double p_err) {
    const auto& pts = table.points;
    if (p_err <= pts.front().first) return pts.front().second;
    if (p_err >= pts.back().first) return pts.back().second;
    auto hi = std::lower_bound(pts.begin(), pts.end(), p_err,
                               [](const auto& point, double v) {
                                   return point.first < v;
                               });
    auto lo = hi - 1;
    if (std::isinf(lo->second) || std::isinf(hi->second))
        return std::numeric_limits<double>::infinity();
    double w = (p_err - lo->first) / (hi->first - lo->first);
    return lo->second + w * (hi->second - lo->second);
}

std::vector<SweepPoint> run_sweep(const ParityCheckCode& code,
                                  const ExperimentConfig& config) {
    validate_grid(config.grid);
    if (config.frames == 0) throw DomainError("config: frames must be positive");
    FTable table;
    const bool use_table = !config.f_table_path.empty();
    if (use_table) {
        std::ifstream in(config.f_table_path);
        if (!in) throw Error("cannot open efficiency table " + config.f_table_path);
        table = load_f_table(in, config.f_table_path);
    } else if (config.f_eff < 1.0) {
        throw DomainError("config: need f_eff >= 1 or an f_table");
    }

    std::vector<SweepPoint> rows;
    for (std::size_t i = 0; i < config.grid.size(); ++i) {
        const double p_err = config.grid[i];
        const std::uint64_t point_master = mix_seed(config.seed, i);
        SweepPoint row;
        row.p_err = p_err;
        row.n = code.length();
        row.k = code.dimension();
        row.master_seed = config.seed;
        const double f = use_table ? f_lookup(table, p_err) : config.f_eff;
        if (!std::isfinite(f)) {
            row.status = "infeasible";
            rows.push_back(row);
            continue;
        }
        try {
            auto [s, p] = select_sp(code.length(), code.dimension(), config.delta,
                                    p_err, f);
            SpPlanPtr plan = build_plan(code, s, p, mix_seed(point_master, 1));
            row = estimate_fer(code, plan, BscChannel{p_err}, config.frames,
                               mix_seed(point_master, 2), config.decoder_iters);
            row.master_seed = config.seed;
        } catch (const PlanError&) {
            row.status = "infeasible";
        }
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& rows,
                     double t) {
    out << "p_err,n,k,s,p,R,frames,frame_errors,fer,leak_bits,f_code,f_orig,"
           "key_bound_bits,seed,status\n";
    for (const SweepPoint& row : rows) {
        if (row.status != "ok") {
            out << fmt(row.p_err) << ',' << row.n << ',' << row.k
                << ",,,,,,,,,,," << row.master_seed << ',' << row.status << '\n';
            continue;
        }
        double key_bound = std::max(
            0.0, static_cast<double>(row.k) - static_cast<double>(row.s) - t);
        out << fmt(row.p_err) << ',' << row.n << ',' << row.k << ',' << row.s
            << ',' << row.p << ',' << fmt(row.rate.value()) << ',' << row.frames
            << ',' << row.frame_errors << ',' << fmt(row.fer) << ','
            << row.leak_bits << ',' << fmt(row.f_code) << ',' << fmt(row.f_orig)
            << ',' << fmt(key_bound) << ',' << row.master_seed << ",ok\n";
    }
}

std::vector<CalibrationPoint> run_calibrate(const ParityCheckCode& code,
                                            const ExperimentConfig& config) {
    validate_grid(config.grid);
    return calibrate_efficiency(code, config.delta, config.grid,
                                config.fer_target, config.frames, config.seed,
                                config.f_ceiling, config.decoder_iters);
}

void write_f_table(std::ostream& out, const std::vector<CalibrationPoint>& curve) {
    for (const CalibrationPoint& point : curve) {
        out << fmt(point.p_err) << ' ';
        if (point.reachable) out << fmt(point.f_eff);
        else out << "inf";
        out << '\n';
    }
}

std::vector<CascadePoint> run_cascade(const ExperimentConfig& config) {
    validate_grid(config.grid);
    if (config.frames == 0) throw DomainError("config: frames must be positive");
    if (config.length == 0) throw DomainError("config: length must be positive");

    std::vector<CascadePoint> rows;
    for (std::size_t i = 0; i < config.grid.size(); ++i) {
        const double p_err = config.grid[i];
        const std::uint64_t point_master = mix_seed(config.seed, i);
        CascadePoint row;
        row.p_err = p_err;
        row.length = config.length;
        row.frames = config.frames;
        row.master_seed = config.seed;
        std::size_t leak_total = 0;
        for (std::size_t j = 0; j < config.frames; ++j) {
            const std::uint64_t frame_seed = mix_seed(point_master, j);
            BitString x = BitString::random(config.length, mix_seed(frame_seed, 1));
            BitString y = transmit(x, BscChannel{p_err}, mix_seed(frame_seed, 2));
            auto [corrected, leak] =
                cascade_reconcile(x, y, p_err, mix_seed(frame_seed, 3));
            if (corrected != x) ++row.frame_errors;
            leak_total += leak;
        }
        row.fer = static_cast<double>(row.frame_errors) /
                  static_cast<double>(row.frames);
        row.mean_leak_bits = static_cast<double>(leak_total) /
                             static_cast<double>(row.frames);
        row.f_orig = row.mean_leak_bits /
                     (static_cast<double>(row.length) * binary_entropy(p_err));
        rows.push_back(row);
    }
    return rows;
}

void write_cascade_csv(std::ostream& out, const std::vector<CascadePoint>& rows,
                       double t) {
    out << "p_err,n,k,s,p,R,frames,frame_errors,fer,leak_bits,f_code,f_orig,"
           "key_bound_bits,seed,status\n";
    for (const CascadePoint& row : rows) {
        double key_bound = std::max(
            0.0, static_cast<double>(row.length) - row.mean_leak_bits - t);
        out << fmt(row.p_err) << ',' << row.length << ",,,,," << row.frames
            << ',' << row.frame_errors << ',' << fmt(row.fer) << ','
            << fmt(row.mean_leak_bits) << ",," << fmt(row.f_orig) << ','
            << fmt(key_bound) << ',' << row.master_seed << ",ok\n";
    }
}

std::string key_budget_report(double h_min_prior, std::size_t n, std::size_t k,
                              std::size_t s, std::size_t p, double t) {
    Rational rate = adapted_rate(n, k, s, p);
    LeakageBudget budget = leakage_budget(h_min_prior, n - p - s, rate.value(), t);
    // |X|(1-R) is the integer n-p-k; echo the exact form next to the
    // decimal-rate evaluation.
    const std::size_t leak_int = n - p - k;
    double key_exact = std::max(0.0, h_min_prior - static_cast<double>(leak_int) - t);

    std::ostringstream out;
    out << "payload_len      " << (n - p - s) << '\n'
        << "adapted_rate     " << rate.str() << " = " << fmt(rate.value()) << '\n'
        << "h_min_prior      " << fmt(h_min_prior) << '\n'
        << "security_t       " << fmt(t) << '\n'
        << "leak_bits        " << leak_int << " + " << fmt(t) << " (decimal-rate form "
        << fmt(budget.leak_formula_bits) << ")\n"
        << "key_lower_bound  " << fmt(key_exact) << " (decimal-rate form "
        << fmt(budget.key_bits_lower_bound) << ")\n";
    return out.str();
}

} // namespace recon
