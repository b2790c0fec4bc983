#pragma once

#include <stdexcept>
#include <string>

namespace fpgroups {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed word text. `position` is the 0-based token index.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position(position) {}
  std::size_t position;
};

struct EmptyWord : Error {
  using Error::Error;
};

struct NotNeutral : Error {
  using Error::Error;
};

/// An operation received a diagram or word over the wrong group parameter p.
struct WrongArity : Error {
  using Error::Error;
};

/// A planar graph that should be connected is not; indicates a construction bug.
struct NotConnected : Error {
  using Error::Error;
};

/// Requested enumeration exceeds the configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// Input to complete_from_tau does not satisfy the index-gap condition and
/// the attempted completion did not verify.
struct PreconditionViolated : Error {
  using Error::Error;
};

/// The gap condition held but the symbolic completion failed to re-verify;
/// this signals an implementation bug, not bad input.
struct VerificationFailed : Error {
  using Error::Error;
};

}  // namespace fpgroups
