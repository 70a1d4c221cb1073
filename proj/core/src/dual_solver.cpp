#include "maxent/dual_solver.hpp"

#include "maxent/numerics.hpp"

#include <cmath>
#include <limits>

namespace maxent {

void SolverConfig::check() const {
    if (delta_lambda <= 0.0 || gamma0 <= 0.0 || gamma_raise <= 1.0 || gamma_lower <= 1.0 ||
        gamma_max <= 0.0 || max_iters < 1) {
        throw ValidationError("solver config fields must be strictly positive, "
                              "gamma factors > 1, max_iters >= 1");
    }
}

namespace {

// -sum_k lambda_k x^k for one state.
double neg_poly(const Eigen::VectorXd& lambda, double x) {
    double acc = 0.0;
    for (int k = static_cast<int>(lambda.size()); k >= 1; --k) {
        acc = (acc - lambda(k - 1)) * x;
    }
    return acc;
}

}  // namespace

ScaledPowerSums scaled_power_sums(const Eigen::VectorXd& lambda, const SupportWindow& d,
                                  int max_order) {
    if (max_order < 0) throw ValidationError("max_order must be >= 0");

    double shift = -std::numeric_limits<double>::infinity();
    std::vector<double> exponents(static_cast<std::size_t>(d.size()));
    for (std::int64_t x = d.left; x <= d.right; ++x) {
        const double t = neg_poly(lambda, static_cast<double>(x));
        if (std::isnan(t) || t == std::numeric_limits<double>::infinity()) {
            throw OverflowError("exponent overflowed before stabilization");
        }
        exponents[static_cast<std::size_t>(x - d.left)] = t;
        shift = std::max(shift, t);
    }
    if (!std::isfinite(shift)) shift = 0.0;  // every weight underflowed to exp(-inf)

    Eigen::VectorXd scaled = Eigen::VectorXd::Zero(max_order + 1);
    for (std::int64_t x = d.left; x <= d.right; ++x) {
        const double w = std::exp(exponents[static_cast<std::size_t>(x - d.left)] - shift);
        double xi = 1.0;
        for (int i = 0; i <= max_order; ++i) {
            scaled(i) += xi * w;
            xi *= static_cast<double>(x);
        }
    }
    if (!scaled.allFinite() || scaled(0) <= 0.0) {
        throw OverflowError("power sums not representable after shifting");
    }
    return ScaledPowerSums{shift, std::move(scaled)};
}

Eigen::VectorXd power_sums(const Eigen::VectorXd& lambda, const SupportWindow& d, int max_order) {
    const ScaledPowerSums ps = scaled_power_sums(lambda, d, max_order);
    Eigen::VectorXd values = std::exp(ps.shift) * ps.scaled;
    if (!values.allFinite()) {
        throw OverflowError("materialized power sums overflow; use the scaled form");
    }
    return values;
}

double evaluate_dual(const Eigen::VectorXd& lambda, const SupportWindow& d,
                     const MomentSequence& mu) {
    const ScaledPowerSums ps = scaled_power_sums(lambda, d, 0);
    double psi = ps.log_z();
    for (int k = 1; k <= mu.order(); ++k) psi += lambda(k - 1) * mu[k];
    return psi;
}

Eigen::VectorXd gradient(const Eigen::VectorXd& lambda, const SupportWindow& d,
                         const MomentSequence& mu) {
    const int m = mu.order();
    const ScaledPowerSums ps = scaled_power_sums(lambda, d, m);
    Eigen::VectorXd g(m);
    for (int i = 1; i <= m; ++i) g(i - 1) = mu[i] - ps.moment_ratio(i);
    return g;
}

Eigen::MatrixXd hessian(const Eigen::VectorXd& lambda, const SupportWindow& d, int order) {
    // Covariance of (x^1..x^M) under the current law on D, accumulated in
    // centered form: the textbook Z mu~_{i+j} - mu~_i mu~_j cancellation
    // destroys positive semidefiniteness for concentrated distributions.
    const int m = order;
    const ScaledPowerSums ps = scaled_power_sums(lambda, d, m);
    Eigen::VectorXd mean(m);
    for (int i = 1; i <= m; ++i) mean(i - 1) = ps.moment_ratio(i);

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd centered(m);
    for (std::int64_t x = d.left; x <= d.right; ++x) {
        const double p = std::exp(neg_poly(lambda, static_cast<double>(x)) - ps.shift) /
                         ps.scaled(0);
        double xi = 1.0;
        for (int i = 0; i < m; ++i) {
            xi *= static_cast<double>(x);
            centered(i) = xi - mean(i);
        }
        h.selfadjointView<Eigen::Lower>().rankUpdate(centered, p);
    }
    Eigen::MatrixXd full = h.selfadjointView<Eigen::Lower>();
    return full;
}

Eigen::VectorXd lm_step(const Eigen::VectorXd& lambda, const Eigen::VectorXd& g,
                        const Eigen::MatrixXd& h, double gamma) {
    return lambda - solve_damped(h, gamma, g);
}

std::pair<LagrangeMultipliers, SolverReport> minimize(
    const MomentSequence& mu, const SupportWindow& d, const SolverConfig& cfg,
    const std::optional<Eigen::VectorXd>& warm_start) {
    cfg.check();
    const int m = mu.order();

    Eigen::VectorXd lambda = warm_start ? *warm_start : Eigen::VectorXd::Zero(m);
    if (lambda.size() != m) throw ValidationError("warm start has wrong dimension");

    ScaledPowerSums ps = scaled_power_sums(lambda, d, 2 * m);
    auto dual_at = [&](const ScaledPowerSums& s, const Eigen::VectorXd& l) {
        double psi = s.log_z();
        for (int k = 1; k <= m; ++k) psi += l(k - 1) * mu[k];
        return psi;
    };
    double psi = dual_at(ps, lambda);
    double gamma = cfg.gamma0;

    SolverReport report;
    report.dual_trace.push_back(psi);

    auto grad_of = [&](const ScaledPowerSums& s) {
        Eigen::VectorXd g(m);
        for (int i = 1; i <= m; ++i) g(i - 1) = mu[i] - s.moment_ratio(i);
        return g;
    };

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        report.iterations = iter;
        const Eigen::VectorXd g = grad_of(ps);
        const Eigen::MatrixXd h = hessian(lambda, d, m);

        bool accepted = false;
        while (!accepted) {
            Eigen::VectorXd step;
            bool usable = true;
            ScaledPowerSums cand_ps;
            Eigen::VectorXd cand;
            double cand_psi = 0.0;
            try {
                step = solve_damped(h, gamma, g);
                if (step.lpNorm<Eigen::Infinity>() < cfg.delta_lambda) {
                    // Step is below the stopping threshold: converged. The move is
                    // not applied, keeping the accepted-step trace strictly decreasing.
                    report.converged = true;
                    report.final_gradient_norm = g.lpNorm<Eigen::Infinity>();
                    return {LagrangeMultipliers{lambda, ps.log_z()}, report};
                }
                cand = lambda - step;
                cand_ps = scaled_power_sums(cand, d, 2 * m);
                cand_psi = dual_at(cand_ps, cand);
                if (std::isnan(cand_psi)) usable = false;
            } catch (const SingularSystemError&) {
                usable = false;
            } catch (const OverflowError&) {
                usable = false;
            }
            if (usable && cand_psi < psi) {
                lambda = std::move(cand);
                ps = std::move(cand_ps);
                psi = cand_psi;
                report.dual_trace.push_back(psi);
                gamma /= cfg.gamma_lower;
                accepted = true;
            } else {
                gamma *= cfg.gamma_raise;
                if (gamma > cfg.gamma_max) {
                    throw DivergenceError("damping exceeded cap without an acceptable step");
                }
            }
        }
    }

    report.converged = false;
    report.final_gradient_norm = grad_of(ps).lpNorm<Eigen::Infinity>();
    return {LagrangeMultipliers{lambda, ps.log_z()}, report};
}

FiniteDistribution distribution_from(const LagrangeMultipliers& lm, const SupportWindow& d) {
    std::vector<double> exponents(static_cast<std::size_t>(d.size()));
    double shift = -std::numeric_limits<double>::infinity();
    for (std::int64_t x = d.left; x <= d.right; ++x) {
        const double t = neg_poly(lm.lambda, static_cast<double>(x));
        exponents[static_cast<std::size_t>(x - d.left)] = t;
        shift = std::max(shift, t);
    }
    if (!std::isfinite(shift)) throw ValidationError("multipliers are not finite");
    std::vector<double> weights(exponents.size());
    for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = std::exp(exponents[i] - shift);
    return FiniteDistribution::from_weights(d, std::move(weights));
}

}  // namespace maxent
