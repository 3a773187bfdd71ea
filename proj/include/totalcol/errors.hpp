#pragma once

#include <stdexcept>
#include <string>

namespace totalcol {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph input: out-of-range endpoint or self-loop.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's domain (empty factor, odd K_n for a
/// 1-factorization, unknown element, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A colouring leaves some vertex or edge without a colour. Distinct from a
/// colouring that is complete but improper.
class IncompleteColouringError : public Error {
public:
    using Error::Error;
};

class OutOfConjectureRangeError : public Error {
public:
    using Error::Error;
};

class NotBipartiteError : public Error {
public:
    using Error::Error;
};

/// K_{m,m} has no proper m-edge colouring with a rainbow perfect matching.
class NoRainbowError : public Error {
public:
    using Error::Error;
};

/// Caller-supplied data violates a construction's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// K_n x K_m with n and m both odd: no construction is known.
class OpenProblemError : public Error {
public:
    using Error::Error;
};

}  // namespace totalcol
