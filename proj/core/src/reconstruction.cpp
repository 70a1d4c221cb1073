#include "maxent/reconstruction.hpp"

#include <cmath>

namespace maxent {

namespace {

SupportWindow starting_window(const MomentSequence& mu, const SupportConfig& scfg) {
    if (mu.order() >= 2) return initial_window(mu, scfg);
    // M = 1: no determinant machinery applies. Anchor the left edge at 0 (a
    // lone mean constraint yields a geometric-type law from the origin) and
    // let the extension loop grow the right edge.
    const auto hi = static_cast<std::int64_t>(std::ceil(mu[1]));
    return SupportWindow(0, std::max<std::int64_t>(1, hi));
}

SupportWindow grown(const SupportWindow& d, int step_index, std::int64_t block_increment,
                    const SupportConfig& scfg) {
    if (scfg.strategy == ExtensionStrategy::chebyshev && block_increment > 0) {
        return extend_block(d, block_increment);
    }
    return extend_one(d, step_index, scfg.frozen_left);
}

}  // namespace

ReconstructionResult reconstruct(const MomentSequence& mu, const SupportConfig& scfg,
                                 const SolverConfig& dcfg) {
    scfg.check();
    dcfg.check();
    if (mu.order() < 1) throw ValidationError("reconstruction requires M >= 1");

    SupportWindow d = starting_window(mu, scfg);

    std::int64_t block_increment = 0;
    if (scfg.strategy == ExtensionStrategy::chebyshev && mu.order() >= 2) {
        const double z = mu[2] / scfg.xi;
        block_increment = static_cast<std::int64_t>(
            std::llround(std::ceil(std::abs(z - static_cast<double>(d.right)))));
    }

    std::optional<Eigen::VectorXd> warm;
    int outer = 0;
    while (true) {
        std::pair<LagrangeMultipliers, SolverReport> solved{{}, {}};
        while (true) {
            try {
                solved = minimize(mu, d, dcfg, warm);
                break;
            } catch (const DivergenceError&) {
                // Usually the moments are infeasible on a too-small window;
                // keep growing and retrying cold until the cap is hit.
                if (d.size() >= scfg.max_window) throw;
                d = grown(d, outer, block_increment, scfg);
                ++outer;
                warm.reset();
            }
        }
        auto& [lm, report] = solved;
        FiniteDistribution q = distribution_from(lm, d);

        const bool tail_passed = tail_ok(q, scfg);
        const bool capped = d.size() >= scfg.max_window;
        if (tail_passed || capped) {
            MomentSequence achieved = moments_of(q, mu.order());
            return ReconstructionResult{
                std::move(q),
                std::move(lm),
                d,
                std::move(report),
                outer,
                std::move(achieved),
                tail_passed ? ReconstructionStatus::ok : ReconstructionStatus::window_cap_reached,
            };
        }

        d = grown(d, outer, block_increment, scfg);
        ++outer;
        warm = lm.lambda;
    }
}

}  // namespace maxent
