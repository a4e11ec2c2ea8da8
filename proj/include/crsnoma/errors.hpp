#pragma once

#include <stdexcept>
#include <string>

namespace crsnoma {

// Argument outside the mathematical domain of an operation (x <= 0 etc).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Incomplete-gamma order beyond the supported cap.
struct UnsupportedOrderError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Power split cannot support the s1 target rate (a1 <= eps1*a2).
struct InfeasibleConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A quantity evaluated outside its trustworthy numerical regime
// (e.g. a closed-form rate coming out negative).
struct NumericalRegimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not reach the requested tolerance.
struct ToleranceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace crsnoma
