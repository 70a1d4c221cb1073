#pragma once

#include "maxent/dual_solver.hpp"
#include "maxent/support_estimator.hpp"

namespace maxent {

enum class ReconstructionStatus { ok, window_cap_reached };

struct ReconstructionResult {
    FiniteDistribution distribution;
    LagrangeMultipliers multipliers;
    SupportWindow window;
    SolverReport report;
    int outer_iterations = 0;
    MomentSequence achieved_moments;
    ReconstructionStatus status = ReconstructionStatus::ok;
};

/// Full pipeline: initial window, dual minimization, tail test, window
/// extension, repeat. Each inner solve is warm-started from the previous
/// multipliers; on divergence the window is extended once and the solve
/// retried cold before the error propagates.
ReconstructionResult reconstruct(const MomentSequence& mu, const SupportConfig& scfg,
                                 const SolverConfig& dcfg);

}  // namespace maxent
