#include "maxent/support_estimator.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>

namespace maxent {

void SupportConfig::check() const {
    if (!(delta_prob > 0.0 && delta_prob < 1.0)) {
        throw ValidationError("delta_prob must lie in (0, 1)");
    }
    if (!(xi > 0.0 && xi < 1.0)) throw ValidationError("xi must lie in (0, 1)");
    if (max_window < 1) throw ValidationError("max_window must be >= 1");
}

namespace {

// Bordered moment determinant with last row (1, w, .., w^size-1); rows r hold
// entry(r, c). Expands by cofactors along the last row and cross-checks the
// coefficients against direct determinant evaluation.
PolyCoeffs bordered_determinant_poly(int size, const std::function<double(int, int)>& entry) {
    const int k = size - 1;  // polynomial degree
    Eigen::MatrixXd top(k, size);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < size; ++c) top(r, c) = entry(r, c);

    std::vector<double> coeffs(static_cast<std::size_t>(size), 0.0);
    for (int j = 0; j < size; ++j) {
        Eigen::MatrixXd minor(k, k);
        for (int c = 0, mc = 0; c < size; ++c) {
            if (c == j) continue;
            minor.col(mc++) = top.col(c);
        }
        const double sign = ((k + j) % 2 == 0) ? 1.0 : -1.0;
        coeffs[static_cast<std::size_t>(j)] = sign * (k > 0 ? determinant(minor) : 1.0);
    }

    // Dual-route check: the expanded polynomial must reproduce the full
    // determinant at sample points.
    double scale = 0.0;
    for (double c : coeffs) scale = std::max(scale, std::abs(c));
    PolyCoeffs poly = PolyCoeffs::trimmed(coeffs);  // throws when degenerate
    for (int s = 0; s <= k; ++s) {
        const double w = static_cast<double>(s);
        Eigen::MatrixXd full(size, size);
        full.topRows(k) = top;
        double wp = 1.0;
        for (int c = 0; c < size; ++c) {
            full(k, c) = wp;
            wp *= w;
        }
        const double direct = determinant(full);
        const double expanded = poly.eval(w);
        const double tol = 1e-9 * std::max(1.0, scale * std::pow(std::abs(w) + 1.0, k));
        if (std::abs(direct - expanded) > tol) {
            throw std::logic_error("cofactor expansion disagrees with determinant evaluation");
        }
    }
    return poly;
}

}  // namespace

PolyCoeffs delta0_polynomial(const MomentSequence& mu) {
    const int m = mu.order();
    if (m < 2) throw ValidationError("delta0 polynomial requires M >= 2");
    const int k = m / 2;
    return bordered_determinant_poly(k + 1, [&](int r, int c) { return mu[r + c]; });
}

PolyCoeffs delta1_polynomial(const MomentSequence& mu, double w1) {
    const int m = mu.order();
    if (m < 3 || m % 2 == 0) throw ValidationError("delta1 polynomial requires odd M >= 3");
    const int z = m / 2 + 1;
    return bordered_determinant_poly(
        z, [&](int r, int c) { return mu[r + c + 1] - w1 * mu[r + c]; });
}

SupportWindow initial_window(const MomentSequence& mu, const SupportConfig& cfg) {
    const int m = mu.order();
    if (m < 2) throw ValidationError("initial window requires M >= 2");
    try {
        const PolyCoeffs d0 = delta0_polynomial(mu);
        if (d0.degree() < 1) throw DegeneratePolynomialError("constant determinant polynomial");
        const auto w_roots = real_simple_roots(d0);
        for (const auto& r : w_roots) {
            if (!r.simple) throw InsufficientRealRootsError("non-simple determinant root");
        }
        double lo = w_roots.front().value;
        double hi = w_roots.back().value;
        if (m % 2 == 1) {
            const PolyCoeffs d1 = delta1_polynomial(mu, w_roots.front().value);
            // for M = 3 the first shifted moment vanishes at the delta0 root,
            // leaving a constant; that counts as degenerate
            if (d1.degree() < 1) {
                throw DegeneratePolynomialError("constant determinant polynomial");
            }
            const auto eta_roots = real_simple_roots(d1);
            for (const auto& r : eta_roots) {
                if (!r.simple) throw InsufficientRealRootsError("non-simple determinant root");
            }
            lo = std::min(lo, eta_roots.front().value);
            hi = std::max(hi, eta_roots.back().value);
        }
        const auto left = static_cast<std::int64_t>(std::floor(lo));
        const auto right = static_cast<std::int64_t>(std::ceil(hi));
        return SupportWindow(std::max<std::int64_t>(0, left),
                             std::max<std::int64_t>(right, std::max<std::int64_t>(0, left)));
    } catch (const DegeneratePolynomialError&) {
        return chebyshev_window(mu, cfg);
    } catch (const InsufficientRealRootsError&) {
        return chebyshev_window(mu, cfg);
    }
}

bool tail_ok(const FiniteDistribution& q, const SupportConfig& cfg) {
    const double peak = *std::max_element(q.probs().begin(), q.probs().end());
    const double threshold = cfg.delta_prob * peak;
    if (!(q.probs().back() < threshold)) return false;
    if (cfg.both_ends_tail && q.window().left != 0) {
        if (!(q.probs().front() < threshold)) return false;
    }
    return true;
}

SupportWindow extend_one(const SupportWindow& d, int step_index, bool frozen_left) {
    if (step_index % 2 == 0) {
        const std::int64_t left = frozen_left ? std::max<std::int64_t>(0, d.left)
                                              : std::max<std::int64_t>(0, d.left - 1);
        return SupportWindow(left, d.right);
    }
    return SupportWindow(d.left, d.right + 1);
}

SupportWindow chebyshev_window(const MomentSequence& mu, const SupportConfig& cfg) {
    if (mu.order() < 2) throw ValidationError("chebyshev window requires M >= 2");
    const double z = mu[2] / cfg.xi;
    auto left = static_cast<std::int64_t>(std::floor(mu[1] - z));
    auto right = static_cast<std::int64_t>(std::ceil(mu[1] + z));
    left = std::max<std::int64_t>(0, left);
    right = std::max(right, left);
    if (right - left + 1 > cfg.max_window) right = left + cfg.max_window - 1;
    return SupportWindow(left, right);
}

SupportWindow extend_block(const SupportWindow& d, std::int64_t increment) {
    if (increment < 0) throw ValidationError("increment must be >= 0");
    const std::int64_t half = (increment + 1) / 2;
    return SupportWindow(std::max<std::int64_t>(0, d.left - half), d.right + half);
}

}  // namespace maxent
