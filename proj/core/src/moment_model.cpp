#include "maxent/moment_model.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numeric>

namespace maxent {

SupportWindow::SupportWindow(std::int64_t l, std::int64_t r) : left(l), right(r) {
    if (l < 0 || r < l) {
        throw ValidationError("support window requires 0 <= left <= right");
    }
}

MomentSequence MomentSequence::validate(std::vector<double> raw) {
    if (raw.empty()) {
        throw ValidationError("moment sequence must be non-empty");
    }
    if (std::abs(raw[0] - 1.0) > 1e-12) {
        throw ValidationError("mu_0 must equal 1");
    }
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (!std::isfinite(raw[k])) {
            throw ValidationError("moment mu_" + std::to_string(k) + " is not finite");
        }
        if (raw[k] < 0.0) {
            throw ValidationError("moment mu_" + std::to_string(k) + " is negative");
        }
    }
    if (raw.size() >= 3 && raw[2] < raw[1] * raw[1]) {
        throw ValidationError("mu_2 < mu_1^2");
    }
    return MomentSequence(std::move(raw));
}

double MomentSequence::hankel_min_eigenvalue() const {
    const int m = order();
    const int n = m / 2 + 1;
    double min_eig = std::numeric_limits<double>::infinity();
    // H0 from mu_0.., and the shifted Hankel H1 from mu_1.. when it fits.
    for (int shift = 0; shift <= 1; ++shift) {
        const int size = (shift == 0) ? n : (m + 1 - shift + 1) / 2;
        if (size < 1 || 2 * (size - 1) + shift > m) continue;
        Eigen::MatrixXd h(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) h(i, j) = values_[static_cast<std::size_t>(i + j + shift)];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
        min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
    }
    return min_eig;
}

FiniteDistribution::FiniteDistribution(SupportWindow window, std::vector<double> probs)
    : window_(window), probs_(std::move(probs)) {
    if (static_cast<std::int64_t>(probs_.size()) != window_.size()) {
        throw ValidationError("probability table size does not match window");
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) throw ValidationError("probabilities must be non-negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ValidationError("probabilities must sum to 1 within 1e-12");
    }
}

FiniteDistribution FiniteDistribution::from_weights(SupportWindow window,
                                                    std::vector<double> weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw ValidationError("weights must be non-negative");
        sum += w;
    }
    if (sum <= 0.0) throw ValidationError("weights must have positive total mass");
    for (double& w : weights) w /= sum;
    // Exact renormalization can still leave a 1-ulp residue; fold it into the mode.
    double resid = 1.0 - std::accumulate(weights.begin(), weights.end(), 0.0);
    auto it = std::max_element(weights.begin(), weights.end());
    *it += resid;
    return FiniteDistribution(window, std::move(weights));
}

MomentSequence moments_of(const FiniteDistribution& dist, int order) {
    if (order < 0) throw ValidationError("moment order must be >= 0");
    std::vector<double> mu(static_cast<std::size_t>(order) + 1, 0.0);
    const auto& p = dist.probs();
    for (std::int64_t x = dist.window().left; x <= dist.window().right; ++x) {
        double px = p[static_cast<std::size_t>(x - dist.window().left)];
        double xk = 1.0;
        for (int k = 0; k <= order; ++k) {
            mu[static_cast<std::size_t>(k)] += xk * px;
            xk *= static_cast<double>(x);
        }
    }
    mu[0] = 1.0;  // sums to 1 by the distribution invariant
    if (order >= 2 && mu[2] < mu[1] * mu[1]) {
        mu[2] = mu[1] * mu[1];  // variance >= 0 holds exactly; undo rounding
    }
    return MomentSequence::validate(std::move(mu));
}

double entropy(const FiniteDistribution& dist) {
    double h = 0.0;
    for (double p : dist.probs()) {
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

double total_variation(const FiniteDistribution& a, const FiniteDistribution& b) {
    const std::int64_t lo = std::min(a.window().left, b.window().left);
    const std::int64_t hi = std::max(a.window().right, b.window().right);
    double l1 = 0.0;
    for (std::int64_t x = lo; x <= hi; ++x) l1 += std::abs(a.prob_at(x) - b.prob_at(x));
    return 0.5 * l1;
}

}  // namespace maxent
