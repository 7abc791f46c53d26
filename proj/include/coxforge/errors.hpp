#pragma once

#include <stdexcept>
#include <string>

namespace coxforge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (bad context, invalid class,
/// malformed input). Maps to CLI exit code 1.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public PreconditionError {
 public:
  ContextMismatch() : PreconditionError("context mismatch") {}
  using PreconditionError::PreconditionError;
};

/// A configured search/enumeration cap was hit. Maps to CLI exit code 2.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace coxforge
