#pragma once

#include <stdexcept>
#include <string>

namespace covermip {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (JSON, CLI rational, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Instance data that parses but breaks a type invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or table would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// No feasible solution exists.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an operation's precondition or a stated hypothesis.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace covermip
