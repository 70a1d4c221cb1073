#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "maxent/moment_model.hpp"

namespace maxent {

/// Dual variables lambda_1..lambda_M with the derived normalization.
/// lambda_0 = ln Z - 1 always holds by construction.
struct LagrangeMultipliers {
    Eigen::VectorXd lambda;
    double log_z = 0.0;

    double lambda0() const { return log_z - 1.0; }
};

struct SolverConfig {
    double delta_lambda = 1e-8;  // stopping threshold on the max-norm step
    double gamma0 = 1e-3;        // initial damping
    double gamma_raise = 2.0;    // multiplier after a rejected step
    double gamma_lower = 3.0;    // divisor after an accepted step
    double gamma_max = 1e12;     // divergence cap
    int max_iters = 500;

    void check() const;
};

struct SolverReport {
    bool converged = false;
    int iterations = 0;
    double final_gradient_norm = 0.0;
    std::vector<double> dual_trace;  // dual values at accepted steps, strictly decreasing
};

/// Truncated power sums of the exponential-family weights, kept in log-shifted
/// form so ratios stay stable for any lambda scale.
/// scaled[i] = sum_{x in D} x^i exp(-sum_k lambda_k x^k - shift).
struct ScaledPowerSums {
    double shift = 0.0;
    Eigen::VectorXd scaled;

    double log_z() const { return shift + std::log(scaled(0)); }
    /// mu~_i / Z, independent of the shift.
    double moment_ratio(int i) const { return scaled(i) / scaled(0); }
};

ScaledPowerSums scaled_power_sums(const Eigen::VectorXd& lambda, const SupportWindow& d,
                                  int max_order);

/// Materialized mu~_i for i = 0..max_order; index 0 is Z truncated to D.
/// Throws OverflowError when a value is not representable even after shifting.
Eigen::VectorXd power_sums(const Eigen::VectorXd& lambda, const SupportWindow& d, int max_order);

/// Dual value Psi(lambda) = ln Z + sum lambda_k mu_k with Z truncated to D.
double evaluate_dual(const Eigen::VectorXd& lambda, const SupportWindow& d,
                     const MomentSequence& mu);

/// Gradient entries mu_i - mu~_i / Z for i = 1..M.
Eigen::VectorXd gradient(const Eigen::VectorXd& lambda, const SupportWindow& d,
                         const MomentSequence& mu);

/// Hessian H_ij = (Z mu~_{i+j} - mu~_i mu~_j) / Z^2: the covariance of
/// (x^1..x^M) under the current exponential-family law on D.
Eigen::MatrixXd hessian(const Eigen::VectorXd& lambda, const SupportWindow& d, int order);

/// One damped Newton update lambda - (H + gamma diag(H))^{-1} g.
Eigen::VectorXd lm_step(const Eigen::VectorXd& lambda, const Eigen::VectorXd& g,
                        const Eigen::MatrixXd& h, double gamma);

/// Levenberg-Marquardt minimization of the dual on a fixed window.
/// Starts from warm_start when given, otherwise from zero.
std::pair<LagrangeMultipliers, SolverReport> minimize(
    const MomentSequence& mu, const SupportWindow& d, const SolverConfig& cfg,
    const std::optional<Eigen::VectorXd>& warm_start = std::nullopt);

/// q~(x) = exp(-1 - lambda_0 - sum lambda_k x^k), renormalized over D.
FiniteDistribution distribution_from(const LagrangeMultipliers& lm, const SupportWindow& d);

}  // namespace maxent
