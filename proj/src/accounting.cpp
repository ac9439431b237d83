#include "recon/accounting.hpp"

#include <algorithm>

#include "recon/entropy.hpp"
#include "recon/errors.hpp"

namespace recon {

namespace {

LeakageBudget fill(double h_min_prior, std::size_t payload_len, double rate,
                   double t, double leak) {
    LeakageBudget b;
    b.h_min_prior = h_min_prior;
    b.payload_len = payload_len;
    b.rate = rate;
    b.security_t = t;
    b.leak_formula_bits = leak;
    b.key_bits_lower_bound = std::max(0.0, h_min_prior - leak);
    return b;
}

} // namespace

LeakageBudget leakage_budget(double h_min_prior, std::size_t payload_len,
                             double rate, double t) {
    if (h_min_prior < 0.0 || t < 0.0)
        throw DomainError("leakage_budget: negative entropy argument");
    if (!(rate >= 0.0 && rate <= 1.0))
        throw DomainError("leakage_budget: rate outside [0, 1]");
    double leak = static_cast<double>(payload_len) * (1.0 - rate) + t;
    return fill(h_min_prior, payload_len, rate, t, leak);
}

LeakageBudget leakage_budget(double h_min_prior, const SpPlan& plan, double t) {
    if (h_min_prior < 0.0 || t < 0.0)
        throw DomainError("leakage_budget: negative entropy argument");
    // |X|(1-R) = (n-p-s) - (k-s) = n-p-k, an integer.
    double leak =
        static_cast<double>(plan.n() - plan.punctured_count() - plan.k()) + t;
    return fill(h_min_prior, plan.payload_length(), plan.rate().value(), t, leak);
}

double coset_form_bound(double h_min_prior, const SpPlan& plan, double t) {
    double extended_prior = h_min_prior + static_cast<double>(plan.punctured_count() +
                                                             plan.shortened_count());
    double coset_bits =
        static_cast<double>(plan.shortened_count() + plan.n() - plan.k());
    return extended_prior - coset_bits - t;
}

EfficiencyMetrics efficiency_metrics(std::size_t n, std::size_t k, std::size_t s,
                                     std::size_t p, double p_err) {
    if (!(p_err > 0.0 && p_err < 0.5))
        throw DomainError("efficiency_metrics: p_err must lie in (0, 0.5)");
    Rational rate = adapted_rate(n, k, s, p);
    double h = binary_entropy(p_err);
    if (h <= 0.0) throw DomainError("efficiency_metrics: degenerate channel");
    EfficiencyMetrics m;
    m.f_orig = static_cast<double>(s + n - k) /
               (static_cast<double>(n - p - s) * h);
    m.f_code = (1.0 - rate.value()) / h;
    return m;
}

double secret_rate(double h_x_given_z, double h_x_given_y) {
    return h_x_given_z - h_x_given_y;
}

} // namespace recon
