#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "recon/channel.hpp"
#include "recon/errors.hpp"
#include "recon/rng.hpp"

using namespace recon;

TEST_CASE("transmit flips with the right statistics") {
    BitString x = BitString::random(100000, 7);

    CHECK(transmit(x, BscChannel{0.0}, 1) == x);
    CHECK(transmit(x, BscChannel{1.0}, 1) == ~x);

    BitString y = transmit(x, BscChannel{0.1}, 42);
    std::size_t flips = x.hamming_distance(y);
    // mean 10000, sigma ~95
    CHECK(flips > 9600);
    CHECK(flips < 10400);

    CHECK(transmit(x, BscChannel{0.1}, 42) == y);
    CHECK(transmit(x, BscChannel{0.1}, 43) != y);

    CHECK_THROWS_AS(transmit(x, BscChannel{-0.01}, 1), DomainError);
    CHECK_THROWS_AS(transmit(x, BscChannel{1.01}, 1), DomainError);
}

TEST_CASE("a noiseless frame always reconciles") {
    ParityCheckCode code = generate_gallager(504, 3, 6, 23);

    SpPlanPtr plain = build_plan(code, 0, 0, 3);
    FrameOutcome a = run_frame(code, plain, BscChannel{0.0}, 555);
    CHECK(a.success);
    CHECK(a.leak_bits == code.length() - code.dimension());

    SpPlanPtr shortened = build_plan(code, 20, 0, 3);
    FrameOutcome b = run_frame(code, shortened, BscChannel{0.0}, 555);
    CHECK(b.success);
    CHECK(b.leak_bits == 20 + code.length() - code.dimension());
}

TEST_CASE("frames are a pure function of the frame seed") {
    ParityCheckCode code = generate_gallager(504, 3, 6, 23);
    SpPlanPtr plan = build_plan(code, 10, 20, 3);
    BscChannel channel{0.03};
    FrameOutcome first = run_frame(code, plan, channel, 1001, 60);
    FrameOutcome again = run_frame(code, plan, channel, 1001, 60);
    CHECK(first.success == again.success);
    CHECK(first.leak_bits == again.leak_bits);
    CHECK(first.leak_bits == 10 + code.length() - code.dimension());
}

TEST_CASE("estimate_fer fills the record and stays reproducible") {
    ParityCheckCode code = generate_gallager(504, 3, 6, 23);
    auto [s, p] = select_sp(504, 252, 0.1, 0.1, 1.1);
    CHECK(s > 0);
    CHECK(p > 0);
    SpPlanPtr plan = build_plan(code, s, p, 77);

    SweepPoint row = estimate_fer(code, plan, BscChannel{0.1}, 8, 2718, 15, 1);
    CHECK(row.p_err == 0.1);
    CHECK(row.n == 504);
    CHECK(row.k == 252);
    CHECK(row.s == s);
    CHECK(row.p == p);
    CHECK(row.rate == plan->rate());
    CHECK(row.frames == 8);
    CHECK(row.frame_errors <= 8);
    CHECK(row.fer == doctest::Approx(row.frame_errors / 8.0));
    CHECK(row.leak_bits == s + 504 - 252);
    CHECK(row.f_code > 0.0);
    CHECK(row.f_orig >= row.f_code);
    CHECK(row.master_seed == 2718);
    CHECK(row.status == "ok");

    SweepPoint rerun = estimate_fer(code, plan, BscChannel{0.1}, 8, 2718, 15, 1);
    CHECK(rerun.frame_errors == row.frame_errors);

    CHECK_THROWS_AS(estimate_fer(code, plan, BscChannel{0.1}, 0, 1), DomainError);
}

TEST_CASE("frame error counts do not depend on the worker count") {
    ParityCheckCode code = generate_gallager(504, 3, 6, 23);
    SpPlanPtr plan = build_plan(code, 0, 0, 5);
    BscChannel channel{0.05};
    SweepPoint one = estimate_fer(code, plan, channel, 30, 1234, 50, 1);
    SweepPoint three = estimate_fer(code, plan, channel, 30, 1234, 50, 3);
    SweepPoint many = estimate_fer(code, plan, channel, 30, 1234, 50, 64);
    CHECK(one.frame_errors == three.frame_errors);
    CHECK(one.frame_errors == many.frame_errors);
}

TEST_CASE("worker_count resolution order") {
    char* saved = std::getenv("RECON_THREADS");
    std::string restore = saved ? saved : "";

    setenv("RECON_THREADS", "5", 1);
    CHECK(worker_count() == 5);
    CHECK(worker_count(2) == 2);  // an explicit request wins
    setenv("RECON_THREADS", "junk", 1);
    CHECK(worker_count() >= 1);  // unparseable value falls through
    unsetenv("RECON_THREADS");
    CHECK(worker_count() >= 1);

    if (saved) setenv("RECON_THREADS", restore.c_str(), 1);
}

TEST_CASE("calibration finds the cheapest workable efficiency") {
    ParityCheckCode code = generate_gallager(504, 3, 6, 23);
    // Rate 1/2 is already far below capacity at p_err = 0.02, so the
    // very first probe at f = 1.00 passes.
    auto curve = calibrate_efficiency(code, 0.05, {0.02}, 0.5, 10, 99, 3.0, 60, 1);
    REQUIRE(curve.size() == 1);
    CHECK(curve[0].p_err == 0.02);
    CHECK(curve[0].reachable);
    CHECK(curve[0].f_eff == doctest::Approx(1.0));
    CHECK(curve[0].fer <= 0.5);
    CHECK(curve[0].frames == 10);
}

TEST_CASE("calibration reports an unreachable point at the ceiling") {
    ParityCheckCode code = generate_gallager(504, 3, 6, 23);
    // p_err = 0.2 asks for far more shortening than delta = 0.05 allows,
    // so select_sp is infeasible at every f.
    auto curve = calibrate_efficiency(code, 0.05, {0.2}, 0.5, 10, 99, 3.0, 60, 1);
    REQUIRE(curve.size() == 1);
    CHECK_FALSE(curve[0].reachable);
    CHECK(curve[0].f_eff == doctest::Approx(3.0));
}

TEST_CASE("calibration validates its arguments") {
    ParityCheckCode code = generate_gallager(120, 3, 6, 2);
    CHECK_THROWS_AS(calibrate_efficiency(code, 0.1, {0.05}, 0.0, 5, 1), DomainError);
    CHECK_THROWS_AS(calibrate_efficiency(code, 0.1, {0.05}, 1.0, 5, 1), DomainError);
    CHECK_THROWS_AS(calibrate_efficiency(code, 0.1, {0.5}, 0.1, 5, 1), DomainError);
    CHECK_THROWS_AS(calibrate_efficiency(code, 0.1, {0.05}, 0.1, 5, 1, 0.9),
                    DomainError);
}
