#include "recon/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "recon/errors.hpp"

namespace recon {

namespace {
constexpr double kSumTol = 1e-12;
constexpr double kIndepTol = 1e-12;
} // namespace

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("binary_entropy: p outside [0, 1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

FiniteDistribution::FiniteDistribution(std::vector<std::size_t> dims,
                                       std::vector<double> probs)
    : dims_(std::move(dims)), probs_(std::move(probs)) {
    if (dims_.empty()) throw DomainError("distribution: no axes");
    std::size_t total = 1;
    for (std::size_t d : dims_) {
        if (d == 0) throw DomainError("distribution: empty alphabet");
        total *= d;
    }
    if (probs_.size() != total)
        throw DomainError("distribution: table size does not match shape");
    double sum = 0.0;
    for (double q : probs_) {
        if (!(q >= 0.0)) throw DomainError("distribution: negative probability");
        sum += q;
    }
    if (std::fabs(sum - 1.0) > kSumTol)
        throw DomainError("distribution: probabilities sum to " + std::to_string(sum));
}

FiniteDistribution FiniteDistribution::uniform(std::vector<std::size_t> dims) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    if (total == 0) throw DomainError("distribution: empty alphabet");
    return FiniteDistribution(std::move(dims),
                              std::vector<double>(total, 1.0 / static_cast<double>(total)));
}

double FiniteDistribution::at(const std::vector<std::size_t>& index) const {
    if (index.size() != dims_.size())
        throw DomainError("distribution: index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t a = 0; a < dims_.size(); ++a) {
        if (index[a] >= dims_[a]) throw DomainError("distribution: index out of range");
        flat = flat * dims_[a] + index[a];
    }
    return probs_[flat];
}

FiniteDistribution FiniteDistribution::marginal(
    const std::vector<std::size_t>& keep_axes) const {
    for (std::size_t a : keep_axes)
        if (a >= dims_.size()) throw DomainError("marginal: axis out of range");
    std::vector<std::size_t> out_dims;
    std::size_t out_total = 1;
    for (std::size_t a : keep_axes) {
        out_dims.push_back(dims_[a]);
        out_total *= dims_[a];
    }
    std::vector<double> out(out_total, 0.0);
    std::vector<std::size_t> index(dims_.size(), 0);
    for (std::size_t flat = 0; flat < probs_.size(); ++flat) {
        std::size_t rem = flat;
        for (std::size_t a = dims_.size(); a-- > 0;) {
            index[a] = rem % dims_[a];
            rem /= dims_[a];
        }
        std::size_t out_flat = 0;
        for (std::size_t a : keep_axes) out_flat = out_flat * dims_[a] + index[a];
        out[out_flat] += probs_[flat];
    }
    return FiniteDistribution(std::move(out_dims), std::move(out));
}

double shannon_entropy(const FiniteDistribution& dist) {
    double h = 0.0;
    for (double q : dist.probs())
        if (q > 0.0) h -= q * std::log2(q);
    return h;
}

double min_entropy(const FiniteDistribution& dist) {
    double top = *std::max_element(dist.probs().begin(), dist.probs().end());
    if (top <= 0.0) throw DomainError("min_entropy: all-zero table");
    return -std::log2(top);
}

double cond_min_entropy(const FiniteDistribution& joint) {
    if (joint.dims().size() != 2)
        throw DomainError("cond_min_entropy: expected a joint over (X, Z)");
    const std::size_t nx = joint.dims()[0];
    const std::size_t nz = joint.dims()[1];
    const auto& probs = joint.probs();
    // min_z H_inf(X|Z=z) = -log2 max_z max_x P(x,z)/P(z)
    double worst = 0.0;
    bool any = false;
    for (std::size_t z = 0; z < nz; ++z) {
        double pz = 0.0, top = 0.0;
        for (std::size_t x = 0; x < nx; ++x) {
            double q = probs[x * nz + z];
            pz += q;
            top = std::max(top, q);
        }
        if (pz <= 0.0) continue;
        any = true;
        worst = std::max(worst, top / pz);
    }
    if (!any) throw DomainError("cond_min_entropy: conditioning variable has no mass");
    return -std::log2(worst);
}

std::pair<double, double> check_lemma1(const FiniteDistribution& joint) {
    if (joint.dims().size() != 3)
        throw DomainError("check_lemma1: expected a joint over (X, Y, Z)");
    const std::size_t nx = joint.dims()[0];
    const std::size_t ny = joint.dims()[1];
    const std::size_t nz = joint.dims()[2];
    const auto& probs = joint.probs();

    FiniteDistribution py = joint.marginal({1});
    FiniteDistribution pxz = joint.marginal({0, 2});
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y)
            for (std::size_t z = 0; z < nz; ++z) {
                double q = probs[(x * ny + y) * nz + z];
                double product = py.probs()[y] * pxz.probs()[x * nz + z];
                if (std::fabs(q - product) > kIndepTol)
                    throw DomainError(
                        "check_lemma1: Y is not independent of (X, Z)");
            }

    // H_inf(XY|Z), treating the pair (x, y) as one variable.
    double worst = 0.0;
    bool any = false;
    for (std::size_t z = 0; z < nz; ++z) {
        double pz = 0.0, top = 0.0;
        for (std::size_t x = 0; x < nx; ++x)
            for (std::size_t y = 0; y < ny; ++y) {
                double q = probs[(x * ny + y) * nz + z];
                pz += q;
                top = std::max(top, q);
            }
        if (pz <= 0.0) continue;
        any = true;
        worst = std::max(worst, top / pz);
    }
    if (!any) throw DomainError("check_lemma1: conditioning variable has no mass");
    double lhs = -std::log2(worst);
    double rhs = cond_min_entropy(pxz) + min_entropy(py);
    return {lhs, rhs};
}

} // namespace recon
