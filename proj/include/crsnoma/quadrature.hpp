#pragma once

#include <functional>

#include "crsnoma/errors.hpp"

namespace crsnoma::quad {

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
};

// Adaptive (G7,K15) integration of f over [a, b]. Splits the interval
// with the largest error estimate until the summed estimate drops below
// abs_tol + rel_tol*|value|. Throws ToleranceError once max_intervals
// subdivisions have not reached the tolerance.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol = 0.0, int max_intervals = 20000);

}  // namespace crsnoma::quad
