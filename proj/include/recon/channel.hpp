#ifndef RECON_CHANNEL_HPP
#define RECON_CHANNEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "recon/bitstring.hpp"
#include "recon/parity_check_code.hpp"
#include "recon/rational.hpp"
#include "recon/sp_protocol.hpp"

namespace recon {

struct BscChannel {
    double p_err = 0.0;  // crossover probability, [0, 1]
};

/// Flips each bit independently with probability p_err; deterministic
/// per seed.
BitString transmit(const BitString& x, const BscChannel& channel,
                   std::uint64_t seed);

struct FrameOutcome {
    bool success = false;      // estimate equals Alice's extended string exactly
    std::size_t leak_bits = 0; // transcript size |C| = s + n - k
};

/// One end-to-end protocol run. The frame seed fans out into four
/// independent streams (payload draw, Alice's filler, channel noise,
/// Bob's filler), so a frame is a pure function of (code, plan,
/// channel, frame_seed).
FrameOutcome run_frame(const ParityCheckCode& code, const SpPlanPtr& plan,
                       const BscChannel& channel, std::uint64_t frame_seed,
                       std::size_t max_iterations = 200);

/// One Monte-Carlo record; also the unit of the sweep CSV.
struct SweepPoint {
    double p_err = 0.0;
    std::size_t n = 0, k = 0, s = 0, p = 0;
    Rational rate;
    std::size_t frames = 0;
    std::size_t frame_errors = 0;
    double fer = 0.0;
    std::size_t leak_bits = 0;  // per frame, s + n - k
    double f_code = 0.0, f_orig = 0.0;  // 0 when p_err leaves (0, 0.5)
    std::uint64_t master_seed = 0;
    std::string status = "ok";
};

/// Runs `frames` independent frames with seed_i = mix_seed(master_seed, i).
/// The result does not depend on thread count or execution order.
/// threads = 0 picks the worker count from RECON_THREADS or the hardware.
SweepPoint estimate_fer(const ParityCheckCode& code, const SpPlanPtr& plan,
                        const BscChannel& channel, std::size_t frames,
                        std::uint64_t master_seed,
                        std::size_t max_iterations = 200,
                        std::size_t threads = 0);

struct CalibrationPoint {
    double p_err = 0.0;
    double f_eff = 0.0;   // minimal f with fer <= target; ceiling if unreachable
    bool reachable = false;
    double fer = 0.0;     // measured at the returned f_eff
    std::size_t frames = 0;
};

/// Empirical efficiency curve f(p_err): for each grid point, the smallest
/// f_eff on a 0.01 grid whose plan from select_sp meets the FER target.
/// Every probe is seeded from (master_seed, grid index, f value) alone,
/// so the curve does not depend on the search path.
std::vector<CalibrationPoint> calibrate_efficiency(
    const ParityCheckCode& code, double delta,
    const std::vector<double>& p_err_grid, double fer_target,
    std::size_t frames, std::uint64_t master_seed, double f_ceiling = 3.0,
    std::size_t max_iterations = 200, std::size_t threads = 0);

/// requested > 0 wins; otherwise RECON_THREADS, otherwise the hardware
/// concurrency (at least 1).
std::size_t worker_count(std::size_t requested = 0);

} // namespace recon

#endif // RECON_CHANNEL_HPP
