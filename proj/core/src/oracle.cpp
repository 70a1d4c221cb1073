#include "maxent/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace maxent {
namespace oracle {

ReferenceLaw ReferenceLaw::poisson(double rate) {
    if (!(rate > 0.0)) throw ValidationError("poisson rate must be > 0");
    return {LawKind::poisson, {rate}};
}

ReferenceLaw ReferenceLaw::binomial(int n, double p) {
    if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw ValidationError("invalid binomial parameters");
    return {LawKind::binomial, {static_cast<double>(n), p}};
}

ReferenceLaw ReferenceLaw::geometric(double success_prob) {
    if (!(success_prob > 0.0 && success_prob <= 1.0)) {
        throw ValidationError("geometric success probability must lie in (0, 1]");
    }
    return {LawKind::geometric, {success_prob}};
}

ReferenceLaw ReferenceLaw::two_point(std::int64_t a, std::int64_t b, double weight_on_a) {
    if (a < 0 || b < 0 || !(weight_on_a >= 0.0 && weight_on_a <= 1.0)) {
        throw ValidationError("invalid two-point parameters");
    }
    return {LawKind::two_point, {static_cast<double>(a), static_cast<double>(b), weight_on_a}};
}

ReferenceLaw ReferenceLaw::uniform() { return {LawKind::uniform, {}}; }

double ReferenceLaw::unnormalized_mass(std::int64_t x) const {
    const auto xd = static_cast<double>(x);
    switch (kind) {
        case LawKind::poisson:
            return std::exp(xd * std::log(params[0]) - params[0] - std::lgamma(xd + 1.0));
        case LawKind::binomial: {
            const double n = params[0];
            const double p = params[1];
            if (xd > n) return 0.0;
            const double log_choose =
                std::lgamma(n + 1.0) - std::lgamma(xd + 1.0) - std::lgamma(n - xd + 1.0);
            double logp = log_choose;
            if (p > 0.0) logp += xd * std::log(p);
            else if (xd > 0.0) return 0.0;
            if (p < 1.0) logp += (n - xd) * std::log(1.0 - p);
            else if (n - xd > 0.0) return 0.0;
            return std::exp(logp);
        }
        case LawKind::geometric:
            return std::exp(xd * std::log1p(-params[0])) * params[0];
        case LawKind::two_point:
            if (xd == params[0]) return params[2];
            if (xd == params[1]) return 1.0 - params[2];
            return 0.0;
        case LawKind::uniform:
            return 1.0;
    }
    return 0.0;
}

FiniteDistribution truncated(const ReferenceLaw& law, const SupportWindow& window) {
    std::vector<double> weights(static_cast<std::size_t>(window.size()));
    for (std::int64_t x = window.left; x <= window.right; ++x) {
        weights[static_cast<std::size_t>(x - window.left)] = law.unnormalized_mass(x);
    }
    return FiniteDistribution::from_weights(window, std::move(weights));
}

MomentSequence reference_moments(const ReferenceLaw& law, const SupportWindow& window,
                                 int order) {
    return moments_of(truncated(law, window), order);
}

namespace {

// Avoids 1/p overflow once tail probabilities underflow during the iteration.
constexpr double kProbFloor = 1e-300;

}  // namespace

FiniteDistribution grid_maxent(const MomentSequence& mu, const SupportWindow& d) {
    const int n = static_cast<int>(d.size());
    const int m = mu.order();

    // Constraint system C p = t: moment rows (scaled to O(1)) plus the
    // normalization row, then row-orthonormalized via QR so the Newton
    // systems stay well conditioned despite monomial collinearity.
    Eigen::MatrixXd c_raw(m + 1, n);
    Eigen::VectorXd t_raw(m + 1);
    for (int k = 1; k <= m; ++k) {
        const double scale = std::max(1.0, std::pow(static_cast<double>(d.right), k));
        for (int j = 0; j < n; ++j) {
            c_raw(k - 1, j) = std::pow(static_cast<double>(d.left + j), k) / scale;
        }
        t_raw(k - 1) = mu[k] / scale;
    }
    c_raw.row(m).setOnes();
    t_raw(m) = 1.0;

    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(c_raw.transpose());
    const Eigen::MatrixXd q_thin =
        qr.householderQ() * Eigen::MatrixXd::Identity(n, m + 1);
    const Eigen::MatrixXd r_factor =
        qr.matrixQR().topRows(m + 1).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd c = q_thin.transpose();
    const Eigen::VectorXd t =
        r_factor.transpose().triangularView<Eigen::Lower>().solve(t_raw);
    const int mm = m + 1;

    // Infeasible-start Newton on the primal table: the entropy objective keeps
    // the iterate strictly positive via a fraction-to-boundary step cap, and
    // the merit weights the dual residual by p so vanishing tail states do not
    // dominate.
    Eigen::VectorXd p = Eigen::VectorXd::Constant(n, 1.0 / n);
    Eigen::VectorXd nu = Eigen::VectorXd::Zero(mm);

    auto dual_resid = [&](const Eigen::VectorXd& pp, const Eigen::VectorXd& nn) {
        Eigen::VectorXd rd(n);
        for (int j = 0; j < n; ++j) rd(j) = std::log(std::max(pp(j), kProbFloor)) + 1.0;
        rd += c.transpose() * nn;
        return rd;
    };
    auto primal_resid = [&](const Eigen::VectorXd& pp) -> Eigen::VectorXd { return c * pp - t; };
    auto merit = [&](const Eigen::VectorXd& pp, const Eigen::VectorXd& nn) {
        const Eigen::VectorXd rd = dual_resid(pp, nn);
        const Eigen::VectorXd rp = primal_resid(pp);
        return std::sqrt(rd.cwiseProduct(pp).squaredNorm() + rp.squaredNorm());
    };

    const int max_iters = 500;
    for (int iter = 0; iter < max_iters; ++iter) {
        const Eigen::VectorXd rd = dual_resid(p, nu);
        const Eigen::VectorXd rp = primal_resid(p);
        if (rp.lpNorm<Eigen::Infinity>() <= 1e-11 &&
            rd.cwiseProduct(p).lpNorm<Eigen::Infinity>() <= 1e-11) {
            return FiniteDistribution::from_weights(d,
                                                    std::vector<double>(p.data(), p.data() + n));
        }

        Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n + mm, n + mm);
        for (int j = 0; j < n; ++j) kkt(j, j) = 1.0 / std::max(p(j), kProbFloor);
        kkt.topRightCorner(n, mm) = c.transpose();
        kkt.bottomLeftCorner(mm, n) = c;
        Eigen::VectorXd rhs(n + mm);
        rhs.head(n) = -rd;
        rhs.tail(mm) = -rp;

        Eigen::PartialPivLU<Eigen::MatrixXd> lu(kkt);
        Eigen::VectorXd sol = lu.solve(rhs);
        sol += lu.solve(rhs - kkt * sol);  // one refinement pass
        if (!sol.allFinite()) break;
        const Eigen::VectorXd dp = sol.head(n);
        const Eigen::VectorXd dnu = sol.tail(mm);

        double alpha = 1.0;
        for (int j = 0; j < n; ++j) {
            if (dp(j) < 0.0) alpha = std::min(alpha, 0.99 * (-p(j) / dp(j)));
        }
        const double m0 = merit(p, nu);
        bool moved = false;
        while (alpha > 1e-16) {
            if (merit(p + alpha * dp, nu + alpha * dnu) <= (1.0 - 0.3 * alpha) * m0) {
                moved = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!moved) break;
        p += alpha * dp;
        nu += alpha * dnu;
    }

    if (primal_resid(p).lpNorm<Eigen::Infinity>() > 1e-6) {
        throw InfeasibleError("infeasible on window");
    }
    return FiniteDistribution::from_weights(d, std::vector<double>(p.data(), p.data() + n));
}

FiniteDistribution analytic_m1(double mu1, const SupportWindow& d) {
    if (d.left != 0) throw ValidationError("analytic M=1 law requires x_L = 0");
    if (!(mu1 > 0.0 && mu1 < static_cast<double>(d.right))) {
        throw InfeasibleError("mean must lie strictly inside (0, x_R)");
    }

    // Truncated mean of q(x) ~ r^x, monotone increasing in r; bisect on ln r.
    auto mean_for = [&](double log_r) {
        double shift = std::max(0.0, static_cast<double>(d.right) * log_r);
        double z = 0.0;
        double first = 0.0;
        for (std::int64_t x = 0; x <= d.right; ++x) {
            const double w = std::exp(static_cast<double>(x) * log_r - shift);
            z += w;
            first += static_cast<double>(x) * w;
        }
        return first / z;
    };

    double lo = -60.0;
    double hi = 60.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mean_for(mid) < mu1) lo = mid;
        else hi = mid;
    }
    const double log_r = 0.5 * (lo + hi);

    std::vector<double> weights(static_cast<std::size_t>(d.size()));
    const double shift = std::max(0.0, static_cast<double>(d.right) * log_r);
    for (std::int64_t x = 0; x <= d.right; ++x) {
        weights[static_cast<std::size_t>(x)] = std::exp(static_cast<double>(x) * log_r - shift);
    }
    return FiniteDistribution::from_weights(d, std::move(weights));
}

}  // namespace oracle
}  // namespace maxent
