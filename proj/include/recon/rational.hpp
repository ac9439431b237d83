#ifndef RECON_RATIONAL_HPP
#define RECON_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "recon/errors.hpp"

namespace recon {

/// Exact fraction of 64-bit integers, always stored reduced with a
/// positive denominator. Rate arithmetic in the protocol is required to
/// be exact, so rates are carried as Rational and only converted to
/// double at reporting boundaries.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw DomainError("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

} // namespace recon

#endif // RECON_RATIONAL_HPP
