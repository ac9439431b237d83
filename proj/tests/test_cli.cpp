#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "recon/errors.hpp"
#include "recon/experiment.hpp"

using namespace recon;

namespace {

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("config files parse key=value with comments") {
    std::istringstream in(
        "# sweep over the low-noise corner\n"
        "n = 2000\n"
        "col_degree = 3  # regular code\n"
        "row_degree=6\n"
        "\n"
        "delta = 0.05\n"
        "grid = 0.02,0.03\n"
        "f_eff = 1.35\n"
        "frames = 50\n"
        "seed = 17\n"
        "t = 40.5\n"
        "rank_check = off\n"
        "out = rows.csv\n"
        "decoder_iters = 80\n"
        "fer_target = 0.1\n"
        "f_ceiling = 2.5\n"
        "length = 4096\n");
    ExperimentConfig config = parse_config(in, "test");
    CHECK(config.n == 2000);
    CHECK(config.col_degree == 3);
    CHECK(config.row_degree == 6);
    CHECK(config.delta == 0.05);
    CHECK(config.grid == std::vector<double>{0.02, 0.03});
    CHECK(config.f_eff == 1.35);
    CHECK(config.frames == 50);
    CHECK(config.seed == 17);
    CHECK(config.t == 40.5);
    CHECK_FALSE(config.rank_check);
    CHECK(config.out_path == "rows.csv");
    CHECK(config.decoder_iters == 80);
    CHECK(config.fer_target == 0.1);
    CHECK(config.f_ceiling == 2.5);
    CHECK(config.length == 4096);
}

TEST_CASE("config errors carry the line number") {
    std::istringstream bad_key("n = 100\nshoe_size = 44\n");
    CHECK_THROWS_WITH_AS(parse_config(bad_key, "exp.cfg"),
                         doctest::Contains("exp.cfg line 2"), ParseError);
    std::istringstream bad_key2("n = 100\nshoe_size = 44\n");
    CHECK_THROWS_WITH_AS(parse_config(bad_key2, "exp.cfg"),
                         doctest::Contains("unknown key 'shoe_size'"), ParseError);

    std::istringstream no_eq("frames 100\n");
    CHECK_THROWS_WITH_AS(parse_config(no_eq, "exp.cfg"),
                         doctest::Contains("line 1: expected key=value"),
                         ParseError);

    std::istringstream bad_num("frames = soon\n");
    CHECK_THROWS_WITH_AS(parse_config(bad_num, "exp.cfg"),
                         doctest::Contains("bad count 'soon'"), ParseError);

    std::istringstream bad_bool("rank_check = maybe\n");
    CHECK_THROWS_AS(parse_config(bad_bool, "exp.cfg"), ParseError);
}

TEST_CASE("overrides replace parsed values") {
    ExperimentConfig config;
    apply_override(config, "frames", "250");
    apply_override(config, "f_eff", "1.2");
    CHECK(config.frames == 250);
    CHECK(config.f_eff == 1.2);
    CHECK_THROWS_AS(apply_override(config, "", "1"), ParseError);
}

TEST_CASE("grids come as ranges or lists") {
    std::vector<double> ranged = parse_grid("0.02:0.06:0.01");
    REQUIRE(ranged.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(ranged[i] == doctest::Approx(0.02 + 0.01 * static_cast<double>(i)));

    std::vector<double> listed = parse_grid("0.01, 0.05,0.1");
    CHECK(listed == std::vector<double>{0.01, 0.05, 0.1});

    CHECK(parse_grid("0.07").size() == 1);
    CHECK_THROWS_AS(parse_grid("0.1:0.2"), ParseError);
    CHECK_THROWS_AS(parse_grid("0.1:0.2:0"), ParseError);
    CHECK_THROWS_AS(parse_grid("0.3:0.1:0.1"), ParseError);
    CHECK_THROWS_AS(parse_grid("0.1,zebra"), ParseError);
}

TEST_CASE("efficiency tables interpolate and propagate inf") {
    std::istringstream in(
        "# calibrated on the evaluation code\n"
        "0.02 1.00\n"
        "0.04 1.20\n"
        "0.06 inf\n");
    FTable table = load_f_table(in, "f.tbl");
    REQUIRE(table.points.size() == 3);
    CHECK(f_lookup(table, 0.03) == doctest::Approx(1.10));
    CHECK(f_lookup(table, 0.025) == doctest::Approx(1.05));
    CHECK(f_lookup(table, 0.001) == doctest::Approx(1.00));  // clamped low
    CHECK(f_lookup(table, 0.02) == doctest::Approx(1.00));
    CHECK(f_lookup(table, 0.04) == doctest::Approx(1.20));
    CHECK(std::isinf(f_lookup(table, 0.05)));  // inf neighbor poisons the segment
    CHECK(std::isinf(f_lookup(table, 0.06)));
    CHECK(std::isinf(f_lookup(table, 0.90)));  // clamped high

    std::istringstream unordered("0.04 1.2\n0.02 1.0\n");
    CHECK_THROWS_WITH_AS(load_f_table(unordered, "f.tbl"),
                         doctest::Contains("line 2"), ParseError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(load_f_table(empty, "f.tbl"), ParseError);
    std::istringstream ragged("0.02\n");
    CHECK_THROWS_AS(load_f_table(ragged, "f.tbl"), ParseError);
}

TEST_CASE("calibration output round-trips through the table loader") {
    std::vector<CalibrationPoint> curve(2);
    curve[0] = {0.02, 1.07, true, 0.01, 100};
    curve[1] = {0.08, 3.0, false, 0.6, 100};
    std::ostringstream out;
    write_f_table(out, curve);
    CHECK(out.str() == "0.020000 1.070000\n0.080000 inf\n");
    std::istringstream in(out.str());
    FTable table = load_f_table(in, "round");
    CHECK(table.points[0].second == doctest::Approx(1.07));
    CHECK(std::isinf(table.points[1].second));
}

TEST_CASE("load_code picks the alist or the generator") {
    ExperimentConfig config;
    CHECK_THROWS_AS(load_code(config), DomainError);
    config.alist_path = "no_such_file.alist";
    CHECK_THROWS_AS(load_code(config), Error);

    TempFile alist("cli_test_tiny.alist",
                   "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 3\n");
    config.alist_path = alist.path;
    ParityCheckCode from_file = load_code(config);
    CHECK(from_file.length() == 3);
    CHECK(from_file.dimension() == 1);

    config.alist_path.clear();
    config.n = 120;
    config.col_degree = 3;
    config.row_degree = 6;
    ParityCheckCode generated = load_code(config);
    CHECK(generated.length() == 120);
    CHECK(generated.rows() == 60);
}

TEST_CASE("sweeps emit one row per grid point and keep going past infeasible ones") {
    ExperimentConfig config;
    config.n = 120;
    config.col_degree = 3;
    config.row_degree = 6;
    config.delta = 0.05;
    config.grid = {0.02, 0.45};
    config.f_eff = 1.35;
    config.frames = 5;
    config.seed = 9;
    config.decoder_iters = 30;
    ParityCheckCode code = load_code(config);

    std::vector<SweepPoint> rows = run_sweep(code, config);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].status == "ok");
    CHECK(rows[0].n == 120);
    CHECK(rows[0].k == 60);
    CHECK(rows[0].s == 0);
    CHECK(rows[0].p == 6);
    CHECK(rows[0].frames == 5);
    CHECK(rows[0].master_seed == 9);
    CHECK(rows[1].status == "infeasible");
    CHECK(rows[1].master_seed == 9);

    // reruns of the same config are byte-for-byte identical
    std::vector<SweepPoint> again = run_sweep(code, config);
    std::ostringstream csv1, csv2;
    write_sweep_csv(csv1, rows, config.t);
    write_sweep_csv(csv2, again, config.t);
    CHECK(csv1.str() == csv2.str());
}

TEST_CASE("sweeps take efficiencies from a table when given one") {
    ExperimentConfig config;
    config.n = 120;
    config.col_degree = 3;
    config.row_degree = 6;
    config.delta = 0.05;
    config.grid = {0.02, 0.1};
    config.frames = 2;
    config.seed = 4;
    config.decoder_iters = 20;
    ParityCheckCode code = load_code(config);

    CHECK_THROWS_AS(run_sweep(code, config), DomainError);  // no f source at all

    TempFile table("cli_test_f.tbl", "0.02 1.35\n0.08 inf\n");
    config.f_table_path = table.path;
    std::vector<SweepPoint> rows = run_sweep(code, config);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].status == "ok");
    CHECK(rows[1].status == "infeasible");  // table says unreachable past 0.08
}

TEST_CASE("sweep validation") {
    ExperimentConfig config;
    config.n = 120;
    config.col_degree = 3;
    config.row_degree = 6;
    config.f_eff = 1.2;
    ParityCheckCode code = load_code(config);

    config.grid = {0.1, 0.05};
    CHECK_THROWS_AS(run_sweep(code, config), DomainError);
    config.grid = {0.5};
    CHECK_THROWS_AS(run_sweep(code, config), DomainError);
    config.grid = {0.05};
    config.frames = 0;
    CHECK_THROWS_AS(run_sweep(code, config), DomainError);
}

TEST_CASE("sweep rows print in the fixed column layout") {
    SweepPoint ok;
    ok.p_err = 0.05;
    ok.n = 2000;
    ok.k = 1000;
    ok.s = 10;
    ok.p = 90;
    ok.rate = Rational(990, 1900);
    ok.frames = 100;
    ok.frame_errors = 7;
    ok.fer = 0.07;
    ok.leak_bits = 1010;
    ok.f_code = 1.1;
    ok.f_orig = 1.23;
    ok.master_seed = 42;

    SweepPoint bad;
    bad.p_err = 0.45;
    bad.n = 2000;
    bad.k = 1000;
    bad.master_seed = 42;
    bad.status = "infeasible";

    std::ostringstream out;
    write_sweep_csv(out, {ok, bad}, 50.0);
    CHECK(out.str() ==
          "p_err,n,k,s,p,R,frames,frame_errors,fer,leak_bits,f_code,f_orig,"
          "key_bound_bits,seed,status\n"
          "0.050000,2000,1000,10,90,0.521053,100,7,0.070000,1010,1.100000,"
          "1.230000,940.000000,42,ok\n"
          "0.450000,2000,1000,,,,,,,,,,,42,infeasible\n");
}

TEST_CASE("cascade runs share the sweep column layout") {
    ExperimentConfig config;
    config.grid = {0.02};
    config.length = 2000;
    config.frames = 5;
    config.seed = 3;
    std::vector<CascadePoint> rows = run_cascade(config);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].length == 2000);
    CHECK(rows[0].frames == 5);
    CHECK(rows[0].fer >= 0.0);
    CHECK(rows[0].fer <= 1.0);
    CHECK(rows[0].mean_leak_bits > 0.0);
    CHECK(rows[0].f_orig > 1.0);

    CascadePoint fixed;
    fixed.p_err = 0.02;
    fixed.length = 10000;
    fixed.frames = 50;
    fixed.frame_errors = 1;
    fixed.fer = 0.02;
    fixed.mean_leak_bits = 1700.5;
    fixed.f_orig = 1.2;
    fixed.master_seed = 7;
    std::ostringstream out;
    write_cascade_csv(out, {fixed}, 100.0);
    CHECK(out.str() ==
          "p_err,n,k,s,p,R,frames,frame_errors,fer,leak_bits,f_code,f_orig,"
          "key_bound_bits,seed,status\n"
          "0.020000,10000,,,,,50,1,0.020000,1700.500000,,1.200000,"
          "8199.500000,7,ok\n");

    config.length = 0;
    CHECK_THROWS_AS(run_cascade(config), DomainError);
}

TEST_CASE("key budget report shows the exact and decimal forms") {
    std::string report = key_budget_report(190000.0, 200000, 120000, 4228, 5772, 80.0);
    CHECK(report.find("payload_len      190000\n") != std::string::npos);
    CHECK(report.find("28943/47500") != std::string::npos);
    CHECK(report.find("leak_bits        74228 + 80.000000") != std::string::npos);
    CHECK(report.find("key_lower_bound  115692.000000") != std::string::npos);
    CHECK_THROWS_AS(key_budget_report(100.0, 100, 120, 0, 0, 0.0), PlanError);
}
