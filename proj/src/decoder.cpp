#include "recon/decoder.hpp"

#include <algorithm>
#include <cmath>

#include "recon/errors.hpp"

namespace recon {

namespace {

// phi(x) = -ln tanh(x/2), self-inverse on (0, inf). Above 33 the direct
// form loses all precision (tanh rounds to 1), so switch to the 2e^-x
// asymptote; at 0 (punctured inputs) return a value large enough that
// the partner magnitude phi(sum) is indistinguishable from 0.
double phi(double x) {
    if (x > 33.0) return 2.0 * std::exp(-x);
    if (x < 1e-300) return 691.0;
    return -std::log(std::tanh(0.5 * x));
}

double clamp_llr(double v) {
    return std::clamp(v, -LLR_MAX, LLR_MAX);
}

} // namespace

std::vector<double> init_llrs(const SpPlanPtr& plan, const ExtendedString& y_hat,
                              double p_err) {
    if (!(p_err > 0.0 && p_err < 0.5))
        throw DomainError("init_llrs: p_err must lie in (0, 0.5)");
    if (y_hat.bits.size() != plan->n())
        throw DimensionError("init_llrs: extended string length mismatch");
    const double channel = std::min(std::log((1.0 - p_err) / p_err), LLR_MAX);
    std::vector<double> llrs(plan->n(), 0.0);
    for (std::size_t i = 0; i < plan->n(); ++i) {
        const double sign = y_hat.bits.get(i) ? -1.0 : 1.0;
        switch (plan->role(i)) {
        case Role::payload:   llrs[i] = sign * channel; break;
        case Role::punctured: llrs[i] = 0.0; break;
        case Role::shortened: llrs[i] = sign * LLR_MAX; break;
        }
    }
    return llrs;
}

DecodeResult decode(const DecodeInput& input, std::size_t max_iterations) {
    const ParityCheckCode& code = input.code;
    const std::size_t n = code.length();
    const std::size_t m = code.rows();
    if (input.channel_llr.size() != n)
        throw DimensionError("decode: channel LLR length mismatch");
    if (input.target_syndrome.size() != m)
        throw DimensionError("decode: syndrome length mismatch");

    const auto& row_off = code.row_offsets();
    const auto& edge_col = code.edge_columns();
    const auto& col_off = code.column_offsets();
    const auto& col_edge = code.column_edges();
    const std::size_t edges = code.edge_count();

    const std::vector<double>& channel = input.channel_llr;
    std::vector<char> pinned(n);
    for (std::size_t i = 0; i < n; ++i)
        pinned[i] = std::fabs(channel[i]) >= LLR_MAX;

    DecodeResult result;
    result.estimate = BitString(n);
    auto hard_decision = [&](const std::vector<double>& posterior) {
        for (std::size_t i = 0; i < n; ++i)
            result.estimate.set(i, pinned[i] ? channel[i] < 0.0 : posterior[i] < 0.0);
    };

    // Channel-only decision first; a clean frame costs no iterations.
    hard_decision(channel);
    if (syndrome(code, result.estimate) == input.target_syndrome) {
        result.converged = true;
        return result;
    }

    std::vector<double> v2c(edges), c2v(edges, 0.0), posterior(n);
    for (std::size_t e = 0; e < edges; ++e) v2c[e] = channel[edge_col[e]];

    std::vector<double> mag;
    std::vector<char> neg;
    for (std::size_t it = 1; it <= max_iterations; ++it) {
        // Check pass: outgoing magnitude phi(sum of partner phis), sign
        // the product of partner signs, flipped for syndrome bit 1.
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t begin = row_off[j], end = row_off[j + 1];
            const std::size_t deg = end - begin;
            mag.resize(deg);
            neg.resize(deg);
            std::size_t neg_total = input.target_syndrome.get(j) ? 1 : 0;
            for (std::size_t d = 0; d < deg; ++d) {
                const double u = v2c[begin + d];
                neg[d] = u < 0.0;
                neg_total += neg[d];
                mag[d] = phi(std::fabs(u));
            }
            for (std::size_t d = 0; d < deg; ++d) {
                double sum = 0.0;
                for (std::size_t o = 0; o < deg; ++o)
                    if (o != d) sum += mag[o];
                const bool flip = (neg_total - neg[d]) & 1;
                c2v[begin + d] = clamp_llr((flip ? -1.0 : 1.0) * phi(sum));
            }
        }

        // Variable pass; pinned positions keep repeating their channel value.
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t begin = col_off[i], end = col_off[i + 1];
            double total = channel[i];
            for (std::size_t d = begin; d < end; ++d) total += c2v[col_edge[d]];
            posterior[i] = total;
            for (std::size_t d = begin; d < end; ++d) {
                const std::uint32_t e = col_edge[d];
                v2c[e] = pinned[i] ? channel[i] : clamp_llr(total - c2v[e]);
            }
        }

        hard_decision(posterior);
        result.iterations_used = it;
        if (syndrome(code, result.estimate) == input.target_syndrome) {
            result.converged = true;
            return result;
        }
    }
    return result;
}

bool verify(const ParityCheckCode& code, const BitString& estimate,
            const BitString& target_syndrome) {
    if (target_syndrome.size() != code.rows())
        throw DimensionError("verify: syndrome length mismatch");
    return syndrome(code, estimate) == target_syndrome;
}

} // namespace recon
