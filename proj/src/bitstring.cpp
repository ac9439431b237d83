#include "recon/bitstring.hpp"

#include <bit>

namespace recon {

BitString BitString::from_string(std::string_view s) {
    BitString out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c != '0' && c != '1')
            throw DomainError("bitstring: invalid character in literal");
        if (c == '1') out.set(i, true);
    }
    return out;
}

BitString BitString::random(std::size_t length, std::uint64_t seed) {
    SplitMix64 rng(seed);
    BitString out(length);
    for (std::size_t i = 0; i < length; ++i)
        if (rng.next_bit()) out.set(i, true);
    return out;
}

BitString& BitString::operator^=(const BitString& other) {
    if (len_ != other.len_)
        throw DimensionError("bitstring xor: length mismatch (" +
                             std::to_string(len_) + " vs " +
                             std::to_string(other.len_) + ")");
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

BitString BitString::operator~() const {
    BitString out(len_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        out.words_[w] = ~words_[w];
    out.clear_tail();
    return out;
}

std::size_t BitString::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::size_t BitString::hamming_distance(const BitString& other) const {
    if (len_ != other.len_)
        throw DimensionError("hamming distance: length mismatch");
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        total += std::popcount(words_[w] ^ other.words_[w]);
    return total;
}

std::string BitString::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

void BitString::clear_tail() {
    if (len_ & 63) words_.back() &= (std::uint64_t{1} << (len_ & 63)) - 1;
}

} // namespace recon
