#pragma once

#include <stdexcept>
#include <string>

namespace coxlift {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed label, element, reflection or word text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (bad label, unknown
/// reflection, label mismatch).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Enumeration or memoization would exceed the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Operation exists but not for this family (e.g. closed forms outside D/E8).
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace coxlift
