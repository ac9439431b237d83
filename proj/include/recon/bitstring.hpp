#ifndef RECON_BITSTRING_HPP
#define RECON_BITSTRING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "recon/errors.hpp"
#include "recon/rng.hpp"

namespace recon {

/// Binary string stored packed 64 bits per word with an explicit length.
/// Bits beyond the length are kept zero so whole-word operations and
/// equality work without masking at the use sites.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t length)
        : words_((length + 63) / 64, 0), len_(length) {}

    /// Builds from a string of '0'/'1' characters, index 0 first.
    static BitString from_string(std::string_view s);

    /// Length uniform random bits consumed from the given seed's stream.
    static BitString random(std::size_t length, std::uint64_t seed);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitString& operator^=(const BitString& other);
    friend BitString operator^(BitString a, const BitString& b) { a ^= b; return a; }

    /// Bitwise complement of the stored bits (length unchanged).
    BitString operator~() const;

    std::size_t popcount() const;
    std::size_t hamming_distance(const BitString& other) const;

    /// XOR of all bits.
    bool parity() const { return popcount() & 1u; }

    friend bool operator==(const BitString&, const BitString&) = default;

    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::vector<std::uint64_t> words_;
    std::size_t len_ = 0;

    void clear_tail();
};

} // namespace recon

#endif // RECON_BITSTRING_HPP
