#ifndef RECON_DECODER_HPP
#define RECON_DECODER_HPP

#include <cstddef>
#include <vector>

#include "recon/bitstring.hpp"
#include "recon/parity_check_code.hpp"
#include "recon/sp_protocol.hpp"

namespace recon {

/// Saturation value for log-likelihood ratios, natural-log units. A
/// position whose channel LLR reaches the clamp is treated as known:
/// it always repeats its channel message and its decision never flips.
inline constexpr double LLR_MAX = 64.0;

/// Positive LLR favors bit 0. Shortened positions carry +-LLR_MAX,
/// punctured positions carry exactly 0.
struct DecodeInput {
    const ParityCheckCode& code;
    const BitString& target_syndrome;
    const std::vector<double>& channel_llr;
};

struct DecodeResult {
    BitString estimate;
    bool converged = false;
    std::size_t iterations_used = 0;
};

/// Channel LLRs for Bob's extended string: payload bits get the BSC
/// likelihood (1-2b)ln((1-p_err)/p_err), punctured bits 0, shortened
/// bits (1-2b)LLR_MAX.
std::vector<double> init_llrs(const SpPlanPtr& plan, const ExtendedString& y_hat,
                              double p_err);

/// Sum-product decoding toward the target syndrome: check node j flips
/// its outgoing sign when syndrome bit m_j is 1, so the decoder converges
/// into the coset named by the syndrome rather than the code itself.
/// Flooding schedule, tanh-product check rule, messages clamped to
/// +-LLR_MAX, ties at LLR 0 decide bit 0. Early exit as soon as the hard
/// decision matches the target, including before the first iteration.
/// Deterministic; non-convergence is reported, not thrown.
DecodeResult decode(const DecodeInput& input, std::size_t max_iterations = 200);

/// True iff syndrome(code, estimate) equals target_syndrome.
bool verify(const ParityCheckCode& code, const BitString& estimate,
            const BitString& target_syndrome);

} // namespace recon

#endif // RECON_DECODER_HPP
