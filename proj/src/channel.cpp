#include "recon/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>

#include "recon/accounting.hpp"
#include "recon/decoder.hpp"
#include "recon/errors.hpp"
#include "recon/rng.hpp"

namespace recon {

BitString transmit(const BitString& x, const BscChannel& channel,
                   std::uint64_t seed) {
    if (!(channel.p_err >= 0.0 && channel.p_err <= 1.0))
        throw DomainError("transmit: p_err outside [0, 1]");
    SplitMix64 rng(seed);
    BitString y = x;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (rng.next_double() < channel.p_err) y.flip(i);
    return y;
}

FrameOutcome run_frame(const ParityCheckCode& code, const SpPlanPtr& plan,
                       const BscChannel& channel, std::uint64_t frame_seed,
                       std::size_t max_iterations) {
    BitString x = BitString::random(plan->payload_length(), mix_seed(frame_seed, 1));
    auto [x_hat, shortened] = alice_extend(plan, x, mix_seed(frame_seed, 2));
    Transcript transcript = make_transcript(code, x_hat, shortened);
    BitString y = transmit(x, channel, mix_seed(frame_seed, 3));
    ExtendedString y_hat =
        bob_extend(plan, y, transcript.shortened_values, mix_seed(frame_seed, 4));

    // Like init_llrs, but tolerating the degenerate channels the
    // simulator allows (p_err = 0 pins the payload outright).
    double payload_llr;
    if (channel.p_err <= 0.0)
        payload_llr = LLR_MAX;
    else if (channel.p_err >= 1.0)
        payload_llr = -LLR_MAX;
    else
        payload_llr = std::clamp(std::log((1.0 - channel.p_err) / channel.p_err),
                                 -LLR_MAX, LLR_MAX);
    std::vector<double> llrs(plan->n(), 0.0);
    for (std::size_t i = 0; i < plan->n(); ++i) {
        const double sign = y_hat.bits.get(i) ? -1.0 : 1.0;
        switch (plan->role(i)) {
        case Role::payload:   llrs[i] = sign * payload_llr; break;
        case Role::punctured: llrs[i] = 0.0; break;
        case Role::shortened: llrs[i] = sign * LLR_MAX; break;
        }
    }

    DecodeResult decoded =
        decode({code, transcript.syndrome, llrs}, max_iterations);
    FrameOutcome out;
    out.success = decoded.estimate == x_hat.bits;
    out.leak_bits = transcript.total_bits();
    return out;
}

std::size_t worker_count(std::size_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RECON_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

SweepPoint estimate_fer(const ParityCheckCode& code, const SpPlanPtr& plan,
                        const BscChannel& channel, std::size_t frames,
                        std::uint64_t master_seed, std::size_t max_iterations,
                        std::size_t threads) {
    if (frames == 0) throw DomainError("estimate_fer: need at least one frame");

    const std::size_t workers = std::min(worker_count(threads), frames);
    std::vector<std::size_t> errors_per(workers, 0);
    auto work = [&](std::size_t w) {
        std::size_t local = 0;
        for (std::size_t i = w; i < frames; i += workers) {
            FrameOutcome frame = run_frame(code, plan, channel,
                                           mix_seed(master_seed, i), max_iterations);
            if (!frame.success) ++local;
        }
        errors_per[w] = local;
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::size_t errors = 0;
    for (std::size_t e : errors_per) errors += e;

    SweepPoint row;
    row.p_err = channel.p_err;
    row.n = plan->n();
    row.k = plan->k();
    row.s = plan->shortened_count();
    row.p = plan->punctured_count();
    row.rate = plan->rate();
    row.frames = frames;
    row.frame_errors = errors;
    row.fer = static_cast<double>(errors) / static_cast<double>(frames);
    row.leak_bits = row.s + row.n - row.k;
    if (channel.p_err > 0.0 && channel.p_err < 0.5) {
        EfficiencyMetrics m =
            efficiency_metrics(row.n, row.k, row.s, row.p, channel.p_err);
        row.f_orig = m.f_orig;
        row.f_code = m.f_code;
    }
    row.master_seed = master_seed;
    return row;
}

std::vector<CalibrationPoint> calibrate_efficiency(
    const ParityCheckCode& code, double delta,
    const std::vector<double>& p_err_grid, double fer_target,
    std::size_t frames, std::uint64_t master_seed, double f_ceiling,
    std::size_t max_iterations, std::size_t threads) {
    if (!(fer_target > 0.0 && fer_target < 1.0))
        throw DomainError("calibrate: fer_target outside (0, 1)");
    for (double p : p_err_grid)
        if (!(p > 0.0 && p < 0.5))
            throw DomainError("calibrate: grid point outside (0, 0.5)");
    if (f_ceiling < 1.0)
        throw DomainError("calibrate: ceiling below 1");

    std::vector<CalibrationPoint> curve;
    const int ceil_c = static_cast<int>(std::lround(f_ceiling * 100.0));

    for (std::size_t index = 0; index < p_err_grid.size(); ++index) {
        const double p_err = p_err_grid[index];
        // One permutation per grid point, held fixed across probed f so
        // the search varies only the (s, p) split.
        const std::uint64_t perm_seed = mix_seed(master_seed, index);

        auto feasible = [&](int c) {
            try {
                select_sp(code.length(), code.dimension(), delta, p_err, c / 100.0);
                return true;
            } catch (const PlanError&) {
                return false;
            }
        };
        std::map<int, double> fer_at;
        auto measure = [&](int c) {
            auto hit = fer_at.find(c);
            if (hit != fer_at.end()) return hit->second;
            auto [s, p] = select_sp(code.length(), code.dimension(), delta, p_err,
                                    c / 100.0);
            SpPlanPtr plan = build_plan(code, s, p, perm_seed);
            // Probe seed depends only on (master, point, f), never on the
            // search path taken to reach it.
            std::uint64_t probe_seed =
                mix_seed(master_seed, mix_seed(index, static_cast<std::uint64_t>(c)));
            SweepPoint row = estimate_fer(code, plan, BscChannel{p_err}, frames,
                                          probe_seed, max_iterations, threads);
            fer_at[c] = row.fer;
            return row.fer;
        };

        CalibrationPoint point;
        point.p_err = p_err;
        point.frames = frames;

        if (!feasible(100)) {
            point.f_eff = f_ceiling;  // cannot shorten far enough at any f
            curve.push_back(point);
            continue;
        }
        // Feasibility of select_sp only shrinks as f grows; find the edge.
        int lo = 100, hi = ceil_c;
        while (lo < hi) {
            int mid = lo + (hi - lo + 1) / 2;
            if (feasible(mid)) lo = mid; else hi = mid - 1;
        }
        const int feas_max = lo;

        if (measure(feas_max) > fer_target) {
            point.f_eff = f_ceiling;
            point.fer = fer_at[feas_max];
            curve.push_back(point);
            continue;
        }
        // FER is taken to be nonincreasing in f; standard boundary search.
        lo = 100;
        hi = feas_max;
        while (lo < hi) {
            int mid = lo + (hi - lo) / 2;
            if (measure(mid) <= fer_target) hi = mid; else lo = mid + 1;
        }
        point.f_eff = hi / 100.0;
        point.fer = fer_at[hi];
        point.reachable = true;
        curve.push_back(point);
    }
    return curve;
}

} // namespace recon
