#pragma once

#include "maxent/moment_model.hpp"

namespace maxent {
namespace oracle {

enum class LawKind { poisson, binomial, geometric, two_point, uniform };

/// Textbook test law. Parameter layout by kind:
///   poisson   {rate}
///   binomial  {n, p}
///   geometric {success_prob} on {0,1,..} (mass (1-p)^x p)
///   two_point {a, b, weight_on_a}
///   uniform   {} (uniform over the evaluation window)
struct ReferenceLaw {
    LawKind kind;
    std::vector<double> params;

    static ReferenceLaw poisson(double rate);
    static ReferenceLaw binomial(int n, double p);
    static ReferenceLaw geometric(double success_prob);
    static ReferenceLaw two_point(std::int64_t a, std::int64_t b, double weight_on_a);
    static ReferenceLaw uniform();

    double unnormalized_mass(std::int64_t x) const;
};

/// Law truncated to the window and renormalized.
FiniteDistribution truncated(const ReferenceLaw& law, const SupportWindow& window);

/// Moments of the truncated, renormalized law.
MomentSequence reference_moments(const ReferenceLaw& law, const SupportWindow& window, int order);

/// Brute-force constrained entropy maximization on a fixed grid, by
/// projected gradient on the simplex with augmented-Lagrangian moment
/// constraints. Deliberately shares nothing with the dual solver.
/// Throws InfeasibleError when no distribution on D matches the moments.
FiniteDistribution grid_maxent(const MomentSequence& mu, const SupportWindow& d);

/// Closed-form maximum-entropy law for a single mean constraint on
/// {0..x_R}: q(x) proportional to r^x with r solved by bisection so the
/// truncated mean equals mu1.
FiniteDistribution analytic_m1(double mu1, const SupportWindow& d);

}  // namespace oracle
}  // namespace maxent
