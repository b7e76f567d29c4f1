#pragma once

#include <stdexcept>
#include <string>

namespace torus {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

struct NotPositiveDefiniteError : Error {
    int pivot_index;
    NotPositiveDefiniteError(const std::string& msg, int pivot)
        : Error(msg), pivot_index(pivot) {}
};

struct DimensionError : Error {
    using Error::Error;
};

struct ResourceLimitError : Error {
    using Error::Error;
};

struct MixedLevelError : Error {
    using Error::Error;
};

struct NotRationalizableError : Error {
    double best_residual;
    NotRationalizableError(const std::string& msg, double residual)
        : Error(msg), best_residual(residual) {}
};

struct InfeasibleError : Error {
    using Error::Error;
};

struct NumericalInstabilityError : Error {
    using Error::Error;
};

}  // namespace torus
