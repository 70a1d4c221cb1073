#pragma once

#include <cstdint>

#include "maxent/moment_model.hpp"
#include "maxent/numerics.hpp"

namespace maxent {

enum class ExtensionStrategy { incremental, chebyshev };

struct SupportConfig {
    double delta_prob = 1e-3;  // tail threshold
    double xi = 0.1;           // Chebyshev level
    ExtensionStrategy strategy = ExtensionStrategy::incremental;
    std::int64_t max_window = 100000;  // cap on window width, in states
    bool both_ends_tail = false;       // also test the left edge (unless at 0)
    bool frozen_left = false;          // keep the printed even-step rule, which never
                                       // moves the left edge

    void check() const;
};

/// Degree-k polynomial in w from the bordered moment determinant,
/// k = floor(M/2): rows r = (mu_r..mu_{r+k}) for r = 0..k-1, last row
/// (1, w, .., w^k). Expanded by cofactors along the last row; each build is
/// cross-checked against direct determinant evaluation at k+1 sample points.
PolyCoeffs delta0_polynomial(const MomentSequence& mu);

/// Odd-M companion: degree z-1 polynomial in eta from the determinant with
/// shifted rows (mu_{r+c+1} - w1 mu_{r+c}), z = floor(M/2) + 1.
PolyCoeffs delta1_polynomial(const MomentSequence& mu, double w1);

/// Initial window from the determinant-polynomial roots; falls back to
/// chebyshev_window when roots are complex, non-simple, or degenerate.
SupportWindow initial_window(const MomentSequence& mu, const SupportConfig& cfg);

/// Tail test: q(x_R) < delta_prob * max q. With both_ends_tail, q(x_L) must
/// also pass unless x_L = 0.
bool tail_ok(const FiniteDistribution& q, const SupportConfig& cfg);

/// One-state extension, alternating ends: even steps move the left edge down
/// (clamped at 0), odd steps move the right edge up.
SupportWindow extend_one(const SupportWindow& d, int step_index, bool frozen_left = false);

/// Window {max(0, floor(mu1 - z)) .. ceil(mu1 + z)} with z = mu2 / xi,
/// capped at max_window states.
SupportWindow chebyshev_window(const MomentSequence& mu, const SupportConfig& cfg);

/// Symmetric block growth by ceil(increment/2) on each side, left clamped at 0.
SupportWindow extend_block(const SupportWindow& d, std::int64_t increment);

}  // namespace maxent
