#ifndef RECON_ACCOUNTING_HPP
#define RECON_ACCOUNTING_HPP

#include <cstddef>

#include "recon/sp_protocol.hpp"

namespace recon {

// One-sided bound on the min-entropy left in the payload after the syndrome
// and shortened values have been published. The adversary's view costs
// |X|(1-R) bits of min-entropy plus a safety margin t.
struct LeakageBudget {
    double h_min_prior = 0.0;        // H_inf(X|Z) going in, bits
    std::size_t payload_len = 0;     // |X|
    double rate = 0.0;               // adapted rate R
    double security_t = 0.0;
    double leak_formula_bits = 0.0;  // |X|(1-R) + t
    double key_bits_lower_bound = 0.0;  // max(0, prior - leak)
};

LeakageBudget leakage_budget(double h_min_prior, std::size_t payload_len,
                             double rate, double t);

// Exact-integer path: |X|(1-R) collapses to n-p-k for a plan, so the bound
// carries no rounding from the decimal rate.
LeakageBudget leakage_budget(double h_min_prior, const SpPlan& plan, double t);

// Same bound computed on the extended string: the p+s uniform filler bits
// raise the prior, the transcript spends |C| = s+n-k of it plus t. Equals
// h_min_prior - (n-p-k) - t identically; kept un-floored for comparison.
double coset_form_bound(double h_min_prior, const SpPlan& plan, double t);

struct EfficiencyMetrics {
    double f_orig = 0.0;  // (s+n-k) / ((n-p-s) h(p_err)), disclosure over the payload
    double f_code = 0.0;  // (1-R) / h(p_err) on the extended string
};

EfficiencyMetrics efficiency_metrics(std::size_t n, std::size_t k, std::size_t s,
                                     std::size_t p, double p_err);

// H(X|Z) - H(X|Y); negative means no distillable key at these entropies.
double secret_rate(double h_x_given_z, double h_x_given_y);

} // namespace recon

#endif // RECON_ACCOUNTING_HPP
