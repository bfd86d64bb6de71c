#pragma once

#include <stdexcept>
#include <string>

namespace stringy {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation
/// (zero denominator, discrepancy <= -1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition, e.g. Poincare duality.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a genuine pole of a rational function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// The requested point cannot be handled exactly (not an L-th power).
class UnsupportedPointError : public Error {
 public:
  using Error::Error;
};

/// A computation needs data that the input does not provide.
class IncompleteDataError : public Error {
 public:
  using Error::Error;
};

/// The operation does not apply to this kind of input.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rational literals, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace stringy
