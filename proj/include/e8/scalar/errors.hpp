#pragma once

#include <stdexcept>
#include <string>

namespace e8 {

/// Root of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

/// Dimension, degree or shape mismatch between operands.
struct ShapeError : Error {
    using Error::Error;
};

/// An operand violates a precondition (unsorted subset, singular matrix, non-unit scalar, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A model failed one of its construction-time consistency checks.
struct GateFailure : Error {
    using Error::Error;
};

}  // namespace e8
