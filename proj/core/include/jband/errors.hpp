#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jband {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch: non-square input, wrong block size, incompatible product.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A matrix that must be Hermitian is not, beyond the accepted tolerance.
class SymmetryError : public Error {
public:
    using Error::Error;
};

/// Input contains NaN or Inf.
class NonFiniteError : public Error {
public:
    using Error::Error;
};

/// A documented precondition on an argument does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Base for failures of the numerical algorithms themselves.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NotPsdError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A fiber eigenproblem failed while sampling bands; `sample` is the grid index.
class SamplingError : public NumericalError {
public:
    SamplingError(std::size_t sample, const std::string& what)
        : NumericalError("sample j=" + std::to_string(sample) + ": " + what), sample_(sample) {}
    std::size_t sample() const noexcept { return sample_; }

private:
    std::size_t sample_;
};

} // namespace jband
