#ifndef RECON_TOEPLITZ_HPP
#define RECON_TOEPLITZ_HPP

#include <cstdint>

#include "recon/bitstring.hpp"

namespace recon {

// Universal-hash compressor: multiplies the input by a seed-derived binary
// Toeplitz matrix. Row i, column j reads diagonal bit i + in_len - 1 - j of a
// (in_len + out_len - 1)-bit seed stream, so equal (i - j) means equal entry.
BitString amplify(const BitString& key_material, std::size_t out_len,
                  std::uint64_t hash_seed);

} // namespace recon

#endif // RECON_TOEPLITZ_HPP
