#pragma once

#include <cstdint>
#include <vector>

#include "maxent/errors.hpp"

namespace maxent {

/// Contiguous integer window {left..right} on which infinite sums are truncated.
struct SupportWindow {
    std::int64_t left = 0;
    std::int64_t right = 0;

    SupportWindow() = default;
    SupportWindow(std::int64_t l, std::int64_t r);

    std::int64_t size() const { return right - left + 1; }
    bool contains(std::int64_t x) const { return x >= left && x <= right; }

    bool operator==(const SupportWindow&) const = default;
};

/// Validated raw moments mu_0..mu_M of a non-negative integer random variable.
class MomentSequence {
public:
    /// Validates and wraps a raw moment vector. Enforces mu_0 = 1,
    /// non-negativity, and mu_2 >= mu_1^2; throws ValidationError otherwise.
    static MomentSequence validate(std::vector<double> raw);

    int order() const { return static_cast<int>(values_.size()) - 1; }
    const std::vector<double>& values() const { return values_; }
    double operator[](int k) const { return values_[static_cast<std::size_t>(k)]; }

    /// Smallest eigenvalue over the Hankel matrices built from the moments.
    /// Diagnostic only; realizability is not enforced at construction.
    double hankel_min_eigenvalue() const;

private:
    explicit MomentSequence(std::vector<double> v) : values_(std::move(v)) {}
    std::vector<double> values_;
};

inline MomentSequence validate_moments(std::vector<double> raw) {
    return MomentSequence::validate(std::move(raw));
}

/// Explicit probability table over a support window.
class FiniteDistribution {
public:
    /// Probabilities must be non-negative, one per state, and sum to 1
    /// within 1e-12 absolute.
    FiniteDistribution(SupportWindow window, std::vector<double> probs);

    /// Normalizes non-negative weights to a distribution.
    static FiniteDistribution from_weights(SupportWindow window, std::vector<double> weights);

    const SupportWindow& window() const { return window_; }
    const std::vector<double>& probs() const { return probs_; }
    double prob_at(std::int64_t x) const {
        return window_.contains(x) ? probs_[static_cast<std::size_t>(x - window_.left)] : 0.0;
    }

private:
    SupportWindow window_;
    std::vector<double> probs_;
};

/// Raw moments mu_k = sum_x x^k p(x), k = 0..order.
MomentSequence moments_of(const FiniteDistribution& dist, int order);

/// Shannon entropy -sum p ln p with the convention 0 ln 0 = 0.
double entropy(const FiniteDistribution& dist);

/// Half the L1 distance between two tables over the union of their windows.
double total_variation(const FiniteDistribution& a, const FiniteDistribution& b);

}  // namespace maxent
