#pragma once

#include <stdexcept>
#include <string>

namespace turan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (degree too large, point off the circle, bad grid, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested within the proximity threshold of a pole.
class PoleProximityError : public Error {
public:
    using Error::Error;
};

/// Instance does not satisfy the hypothesis of the requested bound.
class HypothesisError : public Error {
public:
    using Error::Error;
};

} // namespace turan
