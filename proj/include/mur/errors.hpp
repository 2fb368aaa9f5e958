#pragma once

#include <stdexcept>
#include <string>

namespace mur {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Non-square, non-Hermitian or empty matrix handed to the eigenkernel.
class InvalidMatrixError : public Error {
public:
    using Error::Error;
};

// Mismatched dimensions or arity between bases, states and distributions.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Request outside the exhaustive-enumeration guard (d > 8 or L > 4).
class ComplexityError : public Error {
public:
    using Error::Error;
};

// Malformed user input: files, names, inline distributions.
class InputError : public Error {
public:
    using Error::Error;
};

// A measure evaluated where it has no defined value (log of zero).
class UndefinedValueError : public Error {
public:
    using Error::Error;
};

} // namespace mur
