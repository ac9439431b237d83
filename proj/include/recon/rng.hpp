#ifndef RECON_RNG_HPP
#define RECON_RNG_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace recon {

// All randomness in the library is drawn from SplitMix64 (Steele, Lea,
// Vigna). The stream discipline is fixed so that two implementations with
// the same seeds produce identical runs:
//   - state advances by the golden-gamma increment, outputs are the
//     standard finalizer;
//   - one coin flip consumes one 64-bit output and takes its top bit;
//   - an index below b consumes one output reduced modulo b;
//   - uniform doubles use the top 53 bits scaled by 2^-53.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    bool next_bit() { return (next_u64() >> 63) != 0; }

    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Derives the i-th child seed of a master seed: the i-th output of the
/// SplitMix64 sequence started at the master state, addressable in O(1).
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Fisher-Yates shuffle of [0, n) driven by the given stream.
inline std::vector<std::uint32_t> random_permutation(std::size_t n, SplitMix64& rng) {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

} // namespace recon

#endif // RECON_RNG_HPP
