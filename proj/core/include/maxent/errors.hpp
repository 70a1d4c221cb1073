#pragma once

#include <stdexcept>
#include <string>

namespace maxent {

/// Input failed a domain invariant (bad moments, bad probabilities, bad config).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A sum left the representable range even after log-domain stabilization.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Damped system could not be solved to the required residual.
class SingularSystemError : public std::runtime_error {
public:
    explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

/// All coefficients of a determinant polynomial vanished.
class DegeneratePolynomialError : public std::runtime_error {
public:
    explicit DegeneratePolynomialError(const std::string& what) : std::runtime_error(what) {}
};

/// Fewer real roots exist than the polynomial degree.
class InsufficientRealRootsError : public std::runtime_error {
public:
    explicit InsufficientRealRootsError(const std::string& what) : std::runtime_error(what) {}
};

/// The damping factor grew past its cap without an acceptable step.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// No distribution on the given window satisfies the constraints.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace maxent
