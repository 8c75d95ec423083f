#pragma once

#include <stdexcept>
#include <string>

namespace hilbmod {

// Base of every error raised by the library. The CLI maps subclasses to
// process exit codes, so new failure modes should derive from the closest
// existing category rather than from std::runtime_error directly.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands of incompatible shape (variable count, truncation degree, size).
class ShapeError : public Error {
public:
    using Error::Error;
};

// An inverse was requested of something with no inverse (zero constant
// term, singular matrix).
class SingularityError : public Error {
public:
    using Error::Error;
};

// Argument outside the domain of the operation (log of a non-positive
// constant, point outside the polydisc).
class DomainError : public Error {
public:
    using Error::Error;
};

// A truncation degree too small for the requested computation.
class TruncationError : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent user input.
class InputError : public Error {
public:
    using Error::Error;
};

// The ideal family is outside what the requested operation covers.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// A frame or metric lost linear independence at its base point.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

} // namespace hilbmod
