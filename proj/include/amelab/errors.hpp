#pragma once

#include <stdexcept>
#include <string>

namespace ame {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live on different qubit counts or incompatible dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// Requested size exceeds the dense-representation cap (n <= 8).
struct CapacityError : Error {
    using Error::Error;
};

/// A documented operation precondition does not hold for the given input.
struct PreconditionError : Error {
    using Error::Error;
};

/// An iterative procedure exhausted its budget before reaching tolerance.
struct ConvergenceError : Error {
    double residual;
    ConvergenceError(const std::string& what, double res) : Error(what), residual(res) {}
};

/// Input file or JSON document is malformed or violates a format contract.
struct ParseError : Error {
    using Error::Error;
};

/// A mathematical identity the implementation relies on failed numerically;
/// indicates a bug, not a user error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace ame
