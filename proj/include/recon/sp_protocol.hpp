#ifndef RECON_SP_PROTOCOL_HPP
#define RECON_SP_PROTOCOL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "recon/bitstring.hpp"
#include "recon/parity_check_code.hpp"
#include "recon/rational.hpp"

namespace recon {

enum class Role : std::uint8_t { payload, punctured, shortened };

/// Rate-adaptation plan: which of the n extended positions carry payload,
/// punctured filler or shortened filler, under the public permutation.
///
/// Immutable value; both parties derive identical plans from the shared
/// (public) permutation seed. Seed 0 is reserved for the identity
/// permutation, which keeps the pre-permutation layout
/// [payload | punctured | shortened] in place.
class SpPlan {
public:
    SpPlan(std::size_t n, std::size_t k, std::size_t s, std::size_t p,
           std::uint64_t permutation_seed, std::uint64_t code_fingerprint);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    std::size_t shortened_count() const { return s_; }
    std::size_t punctured_count() const { return p_; }
    std::size_t payload_length() const { return n_ - p_ - s_; }

    double sigma() const { return static_cast<double>(s_) / static_cast<double>(n_); }
    double pi() const { return static_cast<double>(p_) / static_cast<double>(n_); }
    double delta() const { return static_cast<double>(s_ + p_) / static_cast<double>(n_); }

    /// Adapted rate (k-s)/(n-s-p), exact.
    Rational rate() const { return rate_; }

    std::uint64_t permutation_seed() const { return permutation_seed_; }
    std::uint64_t code_fingerprint() const { return code_fingerprint_; }

    Role role(std::size_t extended_pos) const { return roles_[extended_pos]; }
    const std::vector<Role>& roles() const { return roles_; }

    /// For a payload position, the index into the original string.
    std::size_t payload_index(std::size_t extended_pos) const;

    /// Extended positions listed per role, in original-string order for
    /// payload and in r_A/r_B draw order for the filler roles.
    const std::vector<std::uint32_t>& payload_positions() const { return payload_pos_; }
    const std::vector<std::uint32_t>& punctured_positions() const { return punctured_pos_; }
    const std::vector<std::uint32_t>& shortened_positions() const { return shortened_pos_; }

    friend bool operator==(const SpPlan&, const SpPlan&) = default;

private:
    std::size_t n_, k_, s_, p_;
    std::uint64_t permutation_seed_, code_fingerprint_;
    Rational rate_;
    std::vector<Role> roles_;
    std::vector<std::uint32_t> payload_pos_, punctured_pos_, shortened_pos_;
    std::vector<std::uint32_t> orig_of_;  // extended pos -> payload index
};

using SpPlanPtr = std::shared_ptr<const SpPlan>;

/// n-length extended string together with the plan that laid it out.
struct ExtendedString {
    BitString bits;
    SpPlanPtr plan;

    Role role(std::size_t pos) const { return plan->role(pos); }

    /// Payload positions read back in original order.
    BitString payload() const;
};

/// Public communication of one protocol run: the syndrome of the extended
/// string plus the s shortened-bit values. |C| = s + n - k.
struct Transcript {
    BitString syndrome;
    BitString shortened_values;

    std::size_t total_bits() const { return syndrome.size() + shortened_values.size(); }
};

/// Step 0 parameter selection: with d = round(delta*n) positions to fill
/// and target rate R_target = 1 - f_eff*h(p_err), returns the split
/// (s, p = d - s) with minimal s such that the adapted rate does not
/// exceed R_target.
///
/// Throws InfeasibleRateError when even s = d leaves the rate above
/// target, DomainError on degenerate targets or arguments outside their
/// ranges.
std::pair<std::size_t, std::size_t> select_sp(std::size_t n, std::size_t k,
                                              double delta, double p_err,
                                              double f_eff);

/// (k - s) / (n - s - p), exact.
Rational adapted_rate(std::size_t n, std::size_t k, std::size_t s, std::size_t p);

/// Lays out [payload | punctured | shortened] and applies the public
/// permutation drawn from permutation_seed.
SpPlanPtr build_plan(const ParityCheckCode& code, std::size_t s, std::size_t p,
                     std::uint64_t permutation_seed);

/// Step 1: Alice extends her string with fresh random filler drawn from
/// her secret seed. Returns the extended string and the shortened-bit
/// values destined for the transcript.
std::pair<ExtendedString, BitString> alice_extend(const SpPlanPtr& plan,
                                                  const BitString& x,
                                                  std::uint64_t rng_seed);

/// Step 1: the public message m(x_hat), r_A(s).
Transcript make_transcript(const ParityCheckCode& code, const ExtendedString& x_hat,
                           const BitString& shortened_values);

/// Step 2: Bob extends his string, copying Alice's shortened values and
/// drawing his own random bits for the punctured positions.
ExtendedString bob_extend(const SpPlanPtr& plan, const BitString& y,
                          const BitString& shortened_values, std::uint64_t rng_seed);

/// One-line plan record "n k s p permutation_seed code_fingerprint",
/// sufficient to rebuild the plan against the named code.
std::string format_plan(const SpPlan& plan);
SpPlanPtr parse_plan(const std::string& record, const ParityCheckCode& code);

} // namespace recon

#endif // RECON_SP_PROTOCOL_HPP
