#pragma once

#include <stdexcept>
#include <string>

namespace qqs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArithmeticError : Error {
    using Error::Error;
};

/// Raised when dividing by the zero element of Q(v).
struct DivisionByZero : ArithmeticError {
    DivisionByZero() : ArithmeticError("division by zero in Q(v)") {}
};

/// Raised when specializing a rational function at a pole.
struct EvaluationError : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};

/// An invariant that should hold by construction did not.
struct InternalError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

/// Caller broke a precondition (mixed weights, bad index, empty input).
struct ContractError : Error {
    using Error::Error;
};

/// A structural check (triangularity, rank) failed during construction.
struct VerificationError : Error {
    using Error::Error;
};

}  // namespace qqs
