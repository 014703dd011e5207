#pragma once

#include <stdexcept>
#include <string>

namespace vnfree {

// Base class for every domain error raised by the library. The CLI maps
// ParseError to exit code 1 and everything else derived from Error to 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weights of a direct sum do not add up to 1.
struct WeightSumError : Error {
  using Error::Error;
};

// All weights were zero (or the summand list was empty).
struct EmptyAlgebraError : Error {
  using Error::Error;
};

// Argument outside the documented domain of an operation.
struct RangeError : Error {
  using Error::Error;
};

// A DSL value of the wrong sort was passed to a builtin call.
struct TypeMismatchError : Error {
  using Error::Error;
};

// An operation's stated hypotheses do not hold for the given inputs.
struct HypothesisViolation : Error {
  using Error::Error;
};

// Strict mode rejected an input combination outside the proven rules.
struct ExtrapolationRejected : Error {
  using Error::Error;
};

// A structural invariant failed; indicates a bug, not a user error.
struct InternalInvariantViolation : Error {
  using Error::Error;
};

struct UnknownGroupError : Error {
  using Error::Error;
};

struct TableValidationError : Error {
  using Error::Error;
};

// Carries 1-based position info and the token set the parser expected.
struct ParseError : Error {
  ParseError(std::string message, int line, int column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        line(line),
        column(column) {}

  int line = 1;
  int column = 1;
};

}  // namespace vnfree
