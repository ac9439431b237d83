#include "recon/sp_protocol.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "recon/entropy.hpp"
#include "recon/errors.hpp"
#include "recon/rng.hpp"

namespace recon {

namespace {
constexpr std::uint32_t kNotPayload = std::numeric_limits<std::uint32_t>::max();
}

SpPlan::SpPlan(std::size_t n, std::size_t k, std::size_t s, std::size_t p,
               std::uint64_t permutation_seed, std::uint64_t code_fingerprint)
    : n_(n), k_(k), s_(s), p_(p),
      permutation_seed_(permutation_seed), code_fingerprint_(code_fingerprint) {
    if (s_ > k_) throw PlanError("plan: s exceeds k");
    if (p_ > n_) throw PlanError("plan: p exceeds n");
    if (s_ + p_ >= n_) throw PlanError("plan: no payload positions left");
    rate_ = adapted_rate(n_, k_, s_, p_);

    const std::size_t payload_len = n_ - p_ - s_;
    // Pre-permutation layout: payload, then punctured, then shortened.
    std::vector<std::uint32_t> perm;
    if (permutation_seed_ == 0) {
        perm.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) perm[i] = static_cast<std::uint32_t>(i);
    } else {
        SplitMix64 rng(permutation_seed_);
        perm = random_permutation(n_, rng);
    }

    roles_.resize(n_);
    payload_pos_.resize(payload_len);
    punctured_pos_.resize(p_);
    shortened_pos_.resize(s_);
    orig_of_.assign(n_, kNotPayload);
    for (std::size_t i = 0; i < n_; ++i) {
        const std::uint32_t q = perm[i];
        if (q < payload_len) {
            roles_[i] = Role::payload;
            payload_pos_[q] = static_cast<std::uint32_t>(i);
            orig_of_[i] = q;
        } else if (q < payload_len + p_) {
            roles_[i] = Role::punctured;
            punctured_pos_[q - payload_len] = static_cast<std::uint32_t>(i);
        } else {
            roles_[i] = Role::shortened;
            shortened_pos_[q - payload_len - p_] = static_cast<std::uint32_t>(i);
        }
    }
}

std::size_t SpPlan::payload_index(std::size_t extended_pos) const {
    std::uint32_t q = orig_of_[extended_pos];
    if (q == kNotPayload)
        throw DomainError("plan: position " + std::to_string(extended_pos) +
                          " is not a payload position");
    return q;
}

BitString ExtendedString::payload() const {
    const auto& pos = plan->payload_positions();
    BitString out(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i)
        if (bits.get(pos[i])) out.set(i, true);
    return out;
}

std::pair<std::size_t, std::size_t> select_sp(std::size_t n, std::size_t k,
                                              double delta, double p_err,
                                              double f_eff) {
    if (!(p_err > 0.0 && p_err < 0.5))
        throw DomainError("select_sp: p_err must lie in (0, 0.5)");
    if (f_eff < 1.0)
        throw DomainError("select_sp: efficiency must be at least 1");
    if (!(delta >= 0.0 && delta <= 1.0))
        throw DomainError("select_sp: delta must lie in [0, 1]");
    if (k == 0 || k >= n) throw DomainError("select_sp: need 0 < k < n");

    // Budget of positions to fill, ties rounded up.
    const std::size_t d = static_cast<std::size_t>(
        std::floor(delta * static_cast<double>(n) + 0.5));
    if (d > k)
        throw PlanError("select_sp: budget round(delta*n)=" + std::to_string(d) +
                        " exceeds k=" + std::to_string(k));

    const double r_target = 1.0 - f_eff * binary_entropy(p_err);
    if (r_target >= 1.0)
        throw DomainError("select_sp: degenerate target rate");

    const double s_real =
        static_cast<double>(k) - r_target * static_cast<double>(n - d);
    std::size_t s = 0;
    if (s_real > 0.0) s = static_cast<std::size_t>(std::ceil(s_real));
    if (s > d)
        throw InfeasibleRateError(
            "select_sp: target rate " + std::to_string(r_target) +
            " unreachable; full shortening reaches only " +
            adapted_rate(n, k, d, 0).str());
    return {s, d - s};
}

Rational adapted_rate(std::size_t n, std::size_t k, std::size_t s, std::size_t p) {
    if (k >= n) throw PlanError("adapted_rate: need k < n");
    if (s > k) throw PlanError("adapted_rate: s exceeds k");
    if (s + p > n) throw PlanError("adapted_rate: s+p exceeds n");
    if (s + p == n) throw DomainError("adapted_rate: degenerate length n-s-p=0");
    if (k + p > n) throw PlanError("adapted_rate: punctured bits exceed the redundancy");
    return Rational(static_cast<std::int64_t>(k - s),
                    static_cast<std::int64_t>(n - s - p));
}

SpPlanPtr build_plan(const ParityCheckCode& code, std::size_t s, std::size_t p,
                     std::uint64_t permutation_seed) {
    return std::make_shared<const SpPlan>(code.length(), code.dimension(), s, p,
                                          permutation_seed, code.fingerprint());
}

std::pair<ExtendedString, BitString> alice_extend(const SpPlanPtr& plan,
                                                  const BitString& x,
                                                  std::uint64_t rng_seed) {
    if (x.size() != plan->payload_length())
        throw DimensionError("alice_extend: payload length " + std::to_string(x.size()) +
                             ", plan expects " + std::to_string(plan->payload_length()));
    SplitMix64 rng(rng_seed);
    BitString bits(plan->n());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.get(i)) bits.set(plan->payload_positions()[i], true);
    // Draw order matches the layout: r_A(p) first, then r_A(s).
    for (std::uint32_t pos : plan->punctured_positions())
        if (rng.next_bit()) bits.set(pos, true);
    BitString shortened(plan->shortened_count());
    for (std::size_t j = 0; j < plan->shortened_count(); ++j) {
        if (rng.next_bit()) {
            shortened.set(j, true);
            bits.set(plan->shortened_positions()[j], true);
        }
    }
    return {ExtendedString{std::move(bits), plan}, std::move(shortened)};
}

Transcript make_transcript(const ParityCheckCode& code, const ExtendedString& x_hat,
                           const BitString& shortened_values) {
    if (shortened_values.size() != x_hat.plan->shortened_count())
        throw DimensionError("make_transcript: shortened values length mismatch");
    return Transcript{syndrome(code, x_hat.bits), shortened_values};
}

ExtendedString bob_extend(const SpPlanPtr& plan, const BitString& y,
                          const BitString& shortened_values, std::uint64_t rng_seed) {
    if (y.size() != plan->payload_length())
        throw DimensionError("bob_extend: payload length " + std::to_string(y.size()) +
                             ", plan expects " + std::to_string(plan->payload_length()));
    if (shortened_values.size() != plan->shortened_count())
        throw DimensionError("bob_extend: shortened values length mismatch");
    SplitMix64 rng(rng_seed);
    BitString bits(plan->n());
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y.get(i)) bits.set(plan->payload_positions()[i], true);
    for (std::uint32_t pos : plan->punctured_positions())
        if (rng.next_bit()) bits.set(pos, true);
    for (std::size_t j = 0; j < plan->shortened_count(); ++j)
        if (shortened_values.get(j)) bits.set(plan->shortened_positions()[j], true);
    return ExtendedString{std::move(bits), plan};
}

std::string format_plan(const SpPlan& plan) {
    std::ostringstream out;
    out << plan.n() << ' ' << plan.k() << ' ' << plan.shortened_count() << ' '
        << plan.punctured_count() << ' ' << plan.permutation_seed() << ' '
        << std::hex << plan.code_fingerprint();
    return out.str();
}

SpPlanPtr parse_plan(const std::string& record, const ParityCheckCode& code) {
    std::istringstream in(record);
    std::size_t n, k, s, p;
    std::uint64_t seed, fp;
    if (!(in >> n >> k >> s >> p >> seed >> std::hex >> fp))
        throw ParseError("plan record: expected 'n k s p seed fingerprint'");
    if (n != code.length() || k != code.dimension())
        throw PlanError("plan record: (n, k) does not match the code");
    if (fp != code.fingerprint())
        throw PlanError("plan record: fingerprint names a different code");
    return build_plan(code, s, p, seed);
}

} // namespace recon
