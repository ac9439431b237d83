#ifndef RECON_CASCADE_HPP
#define RECON_CASCADE_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "recon/bitstring.hpp"

namespace recon {

/// Interactive parity-exchange reconciliation, canonical parameters:
/// four passes, first-pass block size ceil(0.73/p_est), block sizes
/// doubling, a fresh seeded permutation per pass (pass one keeps natural
/// order). Alice's side is simulated from x; every parity she would
/// disclose bumps the leak counter by one.
class CascadeSession {
public:
    CascadeSession(const BitString& x, const BitString& y, double p_est,
                   std::uint64_t seed, std::size_t passes = 4);

    void run();

    const BitString& corrected() const { return y_; }
    std::size_t leak_bits() const { return leak_; }
    std::size_t pass_count() const { return passes_; }
    std::size_t initial_block_size() const { return k1_; }

private:
    bool block_parity_differs(std::size_t pass, std::size_t begin, std::size_t end) const;
    std::size_t bisect(std::size_t pass, std::size_t begin, std::size_t end);
    void resolve_odd_blocks(std::size_t passes_ready);

    const BitString& x_;
    BitString y_;
    std::size_t passes_;
    std::size_t k1_ = 1;
    std::vector<std::size_t> block_size_;
    std::vector<std::vector<std::uint32_t>> perm_;
    std::vector<std::vector<std::uint32_t>> inv_perm_;
    std::set<std::pair<std::size_t, std::size_t>> odd_;  // (pass, block)
    std::size_t leak_ = 0;
};

std::pair<BitString, std::size_t> cascade_reconcile(const BitString& x,
                                                    const BitString& y,
                                                    double p_est,
                                                    std::uint64_t seed);

} // namespace recon

#endif // RECON_CASCADE_HPP
