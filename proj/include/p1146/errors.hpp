#pragma once

#include <stdexcept>
#include <string>

namespace p1146 {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different rings, or a monomial/weight vector has the wrong length.
class ArityError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// A variable occurring in the input has no image.
class SubstitutionError : public Error {
public:
    using Error::Error;
};

// Exact division left a nonzero remainder.
class DivisibilityError : public Error {
public:
    using Error::Error;
};

// A component or pullback violates the expected grading.
class GradingError : public Error {
public:
    using Error::Error;
};

// Malformed domain input: non-well-formed weights, invalid pencil cubic, mixed-degree systems.
class DomainError : public Error {
public:
    using Error::Error;
};

// Invalid verification configuration, reported before any check runs.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace p1146
