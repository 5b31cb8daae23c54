#pragma once

#include <stdexcept>
#include <string>

namespace waring {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between an exact and a floating scalar without explicit promotion.
class ModeMismatch : public Error {
 public:
  ModeMismatch() : Error("scalar mode mismatch (exact vs floating); promote explicitly") {}
};

/// Malformed polynomial text, JSON certificate or command line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an operation does not hold (zero form, a0 = 0, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Float-mode decision that cannot be made reliably at the configured tolerance.
class AmbiguityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Something that a theorem guarantees did not happen. Always a bug or a numerical breakdown.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace waring
