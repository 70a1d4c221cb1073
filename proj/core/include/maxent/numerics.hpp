#pragma once

#include <Eigen/Dense>

#include <vector>

#include "maxent/errors.hpp"

namespace maxent {

/// Dense polynomial, coeffs[i] = coefficient of w^i.
struct PolyCoeffs {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double w) const;

    /// Drops trailing coefficients below rel_tol * max|coeff|.
    /// Throws DegeneratePolynomialError when everything vanishes.
    static PolyCoeffs trimmed(std::vector<double> raw, double rel_tol = 1e-12);
};

struct RealRoot {
    double value;
    bool simple;  // false when another root lies within the clustering tolerance
};

/// ln(sum exp(t_i)) via max-shift; -inf when all terms are -inf.
double log_sum_exp(const std::vector<double>& terms);

/// Solves (H + gamma * diag(H)) s = g by direct factorization.
/// Throws SingularSystemError when the relative residual exceeds 1e-10.
Eigen::VectorXd solve_damped(const Eigen::MatrixXd& h, double gamma, const Eigen::VectorXd& g);

/// Determinant via LU with partial pivoting. Intended for small matrices.
double determinant(const Eigen::MatrixXd& a);

/// All real roots of p, ascending, found as companion-matrix eigenvalues.
/// An eigenvalue counts as real when |imag| <= tol * (1 + |real|).
/// Throws InsufficientRealRootsError when fewer real roots exist than the degree.
std::vector<RealRoot> real_simple_roots(const PolyCoeffs& p, double tol = 1e-8);

}  // namespace maxent
