#pragma once

#include <stdexcept>
#include <string>

namespace fibfact {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rewrite window does not hold the required digit pattern.
class PatternMismatch : public Error {
 public:
  using Error::Error;
};

/// Rewrite would push a digit above 3.
class DigitOverflow : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a configured materialization or enumeration bound.
class ResourceBound : public Error {
 public:
  using Error::Error;
};

/// Digit string violates the canonical language where one is required.
class NonCanonicalInput : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace fibfact
