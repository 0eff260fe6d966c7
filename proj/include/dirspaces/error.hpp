#pragma once

#include <stdexcept>
#include <string>

namespace dirspaces {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input rejected before any computation (bad index, bad parameter,
/// violated precondition, malformed config). The CLI maps these to exit 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

class InvalidIndexError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidMeasureError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class PreconditionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// The image n^{-Phi} has no coefficient at or below the truncation.
class TruncationEmptyError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A numerical procedure failed: non-convergence, a pole, a divergent sum.
/// The CLI maps these to exit 3.
class NumericError : public Error {
public:
    using Error::Error;
};

class PoleError : public NumericError {
public:
    using NumericError::NumericError;
};

class DivergenceError : public NumericError {
public:
    DivergenceError(const std::string& what, double abscissa)
        : NumericError(what), abscissa_(abscissa) {}

    /// Smallest abscissa at which the offending sum is known to converge.
    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

}  // namespace dirspaces
