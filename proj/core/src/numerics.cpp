#include "maxent/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace maxent {

double PolyCoeffs::eval(double w) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * w + *it;
    return acc;
}

PolyCoeffs PolyCoeffs::trimmed(std::vector<double> raw, double rel_tol) {
    double max_abs = 0.0;
    for (double c : raw) max_abs = std::max(max_abs, std::abs(c));
    if (max_abs == 0.0) {
        throw DegeneratePolynomialError("all polynomial coefficients vanish");
    }
    while (raw.size() > 1 && std::abs(raw.back()) <= rel_tol * max_abs) raw.pop_back();
    if (raw.size() == 1 && std::abs(raw[0]) <= rel_tol * max_abs) {
        throw DegeneratePolynomialError("polynomial trimmed to zero");
    }
    return PolyCoeffs{std::move(raw)};
}

double log_sum_exp(const std::vector<double>& terms) {
    const double m = *std::max_element(terms.begin(), terms.end());
    if (!std::isfinite(m)) {
        // all -inf, or a +inf/nan slipped in
        return m;
    }
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - m);
    return m + std::log(acc);
}

Eigen::VectorXd solve_damped(const Eigen::MatrixXd& h, double gamma, const Eigen::VectorXd& g) {
    Eigen::MatrixXd a = h;
    a.diagonal() += gamma * h.diagonal();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
    if (ldlt.info() != Eigen::Success) {
        throw SingularSystemError("damped system factorization failed");
    }
    Eigen::VectorXd s = ldlt.solve(g);
    const double gnorm = g.norm();
    const double resid = (a * s - g).norm();
    if (!s.allFinite() || (gnorm > 0.0 && resid > 1e-10 * gnorm)) {
        throw SingularSystemError("damped system solve exceeded residual tolerance");
    }
    return s;
}

double determinant(const Eigen::MatrixXd& a) {
    return Eigen::PartialPivLU<Eigen::MatrixXd>(a).determinant();
}

std::vector<RealRoot> real_simple_roots(const PolyCoeffs& p, double tol) {
    const int n = p.degree();
    if (n < 1) throw ValidationError("root finding requires degree >= 1");

    std::vector<RealRoot> roots;
    if (n == 1) {
        roots.push_back({-p.coeffs[0] / p.coeffs[1], true});
        return roots;
    }

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    const double lead = p.coeffs[static_cast<std::size_t>(n)];
    for (int i = 0; i < n; ++i) {
        companion(i, n - 1) = -p.coeffs[static_cast<std::size_t>(i)] / lead;
        if (i > 0) companion(i, i - 1) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
    if (es.info() != Eigen::Success) {
        throw InsufficientRealRootsError("eigenvalue iteration failed");
    }

    std::vector<double> real_vals;
    for (int i = 0; i < n; ++i) {
        const std::complex<double> z = es.eigenvalues()(i);
        if (std::abs(z.imag()) <= tol * (1.0 + std::abs(z.real()))) {
            real_vals.push_back(z.real());
        }
    }
    if (static_cast<int>(real_vals.size()) < n) {
        throw InsufficientRealRootsError("insufficient real roots");
    }
    std::sort(real_vals.begin(), real_vals.end());

    for (std::size_t i = 0; i < real_vals.size(); ++i) {
        const double r = real_vals[i];
        const double cluster = tol * (1.0 + std::abs(r));
        bool simple = true;
        if (i > 0 && r - real_vals[i - 1] <= cluster) simple = false;
        if (i + 1 < real_vals.size() && real_vals[i + 1] - r <= cluster) simple = false;
        roots.push_back({r, simple});
    }
    return roots;
}

}  // namespace maxent
