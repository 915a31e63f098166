#pragma once

#include <stdexcept>
#include <string>

namespace spheregreen {

// Argument outside the mathematical domain of an operation (|t| > 1, r >= 1, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Parameter set violates a constraint of the chosen representation.
class parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature did not reach the requested tolerance.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double value, double error_estimate)
        : std::runtime_error(what), value_(value), error_(error_estimate) {}
    double value() const noexcept { return value_; }
    double error_estimate() const noexcept { return error_; }

private:
    double value_;
    double error_;
};

// a = -l^2 (l + 2 lambda)^2 hit without the matching skip / projection.
class resonance_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The requested series has no convergent tail bound for this dimension.
class divergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A pole of a rational expression was hit.
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace spheregreen
