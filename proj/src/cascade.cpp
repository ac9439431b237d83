#include "recon/cascade.hpp"

#include <algorithm>
#include <cmath>

#include "recon/errors.hpp"
#include "recon/rng.hpp"

namespace recon {

CascadeSession::CascadeSession(const BitString& x, const BitString& y,
                               double p_est, std::uint64_t seed,
                               std::size_t passes)
    : x_(x), y_(y), passes_(passes) {
    if (x.size() != y.size())
        throw DimensionError("cascade: string lengths differ");
    if (!(p_est > 0.0 && p_est < 0.5))
        throw DomainError("cascade: p_est must lie in (0, 0.5)");
    const std::size_t n = x.size();
    if (n == 0) { passes_ = 0; return; }

    k1_ = static_cast<std::size_t>(std::ceil(0.73 / p_est));
    k1_ = std::clamp<std::size_t>(k1_, 1, n);
    perm_.resize(passes_);
    inv_perm_.resize(passes_);
    block_size_.resize(passes_);
    for (std::size_t pass = 0; pass < passes_; ++pass) {
        block_size_[pass] = std::min(n, k1_ << pass);
        if (pass == 0) {
            perm_[pass].resize(n);
            for (std::size_t i = 0; i < n; ++i)
                perm_[pass][i] = static_cast<std::uint32_t>(i);
        } else {
            SplitMix64 rng(mix_seed(seed, pass));
            perm_[pass] = random_permutation(n, rng);
        }
        inv_perm_[pass].resize(n);
        for (std::size_t i = 0; i < n; ++i)
            inv_perm_[pass][perm_[pass][i]] = static_cast<std::uint32_t>(i);
    }
}

bool CascadeSession::block_parity_differs(std::size_t pass, std::size_t begin,
                                          std::size_t end) const {
    bool diff = false;
    for (std::size_t i = begin; i < end; ++i) {
        const std::uint32_t pos = perm_[pass][i];
        diff ^= x_.get(pos) ^ y_.get(pos);
    }
    return diff;
}

// BINARY: halve toward the error, one disclosed parity per split.
std::size_t CascadeSession::bisect(std::size_t pass, std::size_t begin,
                                   std::size_t end) {
    while (end - begin > 1) {
        const std::size_t mid = begin + (end - begin + 1) / 2;
        ++leak_;
        if (block_parity_differs(pass, begin, mid))
            end = mid;
        else
            begin = mid;
    }
    return perm_[pass][begin];
}

void CascadeSession::resolve_odd_blocks(std::size_t passes_ready) {
    while (!odd_.empty()) {
        const auto [pass, block] = *odd_.begin();
        const std::size_t begin = block * block_size_[pass];
        const std::size_t end = std::min(begin + block_size_[pass], y_.size());
        const std::size_t pos = bisect(pass, begin, end);
        y_.flip(pos);
        // The flip changes the parity of this bit's block in every pass
        // scanned so far, the bisected block included.
        for (std::size_t q = 0; q < passes_ready; ++q) {
            const std::size_t where = inv_perm_[q][pos];
            const std::pair<std::size_t, std::size_t> key{q, where / block_size_[q]};
            auto hit = odd_.find(key);
            if (hit != odd_.end()) odd_.erase(hit); else odd_.insert(key);
        }
    }
}

void CascadeSession::run() {
    const std::size_t n = y_.size();
    for (std::size_t pass = 0; pass < passes_; ++pass) {
        const std::size_t bs = block_size_[pass];
        const std::size_t blocks = (n + bs - 1) / bs;
        for (std::size_t b = 0; b < blocks; ++b) {
            ++leak_;  // Alice discloses the block parity
            if (block_parity_differs(pass, b * bs, std::min((b + 1) * bs, n)))
                odd_.insert({pass, b});
        }
        resolve_odd_blocks(pass + 1);
    }
}

std::pair<BitString, std::size_t> cascade_reconcile(const BitString& x,
                                                    const BitString& y,
                                                    double p_est,
                                                    std::uint64_t seed) {
    CascadeSession session(x, y, p_est, seed);
    session.run();
    return {session.corrected(), session.leak_bits()};
}

} // namespace recon
