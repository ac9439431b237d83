#ifndef RECON_ENTROPY_HPP
#define RECON_ENTROPY_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace recon {

// h(p) = -p log2 p - (1-p) log2 (1-p), with 0 log 0 taken as 0.
double binary_entropy(double p);

// Probability table over a finite alphabet, optionally shaped as a joint
// distribution (row-major over dims). Immutable once built; probabilities
// must be nonnegative and sum to 1 within 1e-12.
class FiniteDistribution {
public:
    FiniteDistribution(std::vector<std::size_t> dims, std::vector<double> probs);

    static FiniteDistribution uniform(std::vector<std::size_t> dims);

    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }

    double at(const std::vector<std::size_t>& index) const;

    // Marginal over the kept axes, in the order given.
    FiniteDistribution marginal(const std::vector<std::size_t>& keep_axes) const;

private:
    std::vector<std::size_t> dims_;
    std::vector<double> probs_;
};

double shannon_entropy(const FiniteDistribution& dist);

// H_inf(X) = -log2 max_x P(x), over the whole table.
double min_entropy(const FiniteDistribution& dist);

// joint shaped (X, Z); worst case over z of H_inf(X | Z=z). Outcomes z with
// zero marginal are skipped.
double cond_min_entropy(const FiniteDistribution& joint);

// joint shaped (X, Y, Z) with Y independent of (X, Z); returns
// (H_inf(XY|Z), H_inf(X|Z) + H_inf(Y)). The two agree when the
// independence hypothesis holds; violating it is an error.
std::pair<double, double> check_lemma1(const FiniteDistribution& joint);

} // namespace recon

#endif // RECON_ENTROPY_HPP
