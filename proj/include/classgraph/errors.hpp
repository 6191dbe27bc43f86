#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, elements outside the group, broken preconditions.
struct InputError : Error {
    using Error::Error;
};

/// A configurable resource limit was hit (order cap, coset cap).
struct CapExceeded : Error {
    using Error::Error;
};

struct CosetLimitExceeded : CapExceeded {
    using CapExceeded::CapExceeded;
};

struct IncompatibleDegrees : InputError {
    using InputError::InputError;
};

struct ElementNotInGroup : InputError {
    using InputError::InputError;
};

struct NotNormal : InputError {
    using InputError::InputError;
};

struct NotDisconnected : InputError {
    using InputError::InputError;
};

struct PrimeDoesNotDivideOrder : InputError {
    using InputError::InputError;
};

struct ActionNotAutomorphism : InputError {
    using InputError::InputError;
};

struct KernelInvalid : InputError {
    using InputError::InputError;
};

/// Presentation text could not be parsed; carries the byte offset of the problem.
struct SyntaxError : InputError {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : InputError(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownGenerator : SyntaxError {
    using SyntaxError::SyntaxError;
};

}  // namespace cg
