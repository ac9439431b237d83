#include "recon/toeplitz.hpp"

#include <vector>

#include "recon/errors.hpp"
#include "recon/rng.hpp"

namespace recon {

BitString amplify(const BitString& key_material, std::size_t out_len,
                  std::uint64_t hash_seed) {
    const std::size_t in_len = key_material.size();
    if (out_len > in_len)
        throw DomainError("amplify: requested " + std::to_string(out_len) +
                          " bits from " + std::to_string(in_len));
    BitString out(out_len);
    if (out_len == 0) return out;

    BitString diag = BitString::random(in_len + out_len - 1, hash_seed);
    std::vector<std::size_t> set_bits;
    for (std::size_t j = 0; j < in_len; ++j)
        if (key_material.get(j)) set_bits.push_back(j);

    for (std::size_t i = 0; i < out_len; ++i) {
        bool acc = false;
        for (std::size_t j : set_bits) acc ^= diag.get(i + in_len - 1 - j);
        if (acc) out.set(i, true);
    }
    return out;
}

} // namespace recon
