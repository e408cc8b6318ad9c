#pragma once

#include <stdexcept>
#include <string>

namespace cauchynet {

/// Base of every error raised by the library. The CLI maps the concrete
/// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition or configuration violation detected before any compute.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A shifted input landed exactly on a pole of the activation or kernel.
class PoleEncountered : public Error {
 public:
  using Error::Error;
};

/// Overflow or NaN produced by arithmetic that is otherwise well defined.
class NonFinite : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DegenerateRange : public Error {
 public:
  using Error::Error;
};

class NonPositiveValue : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Checkpoint or expansion document with a wrong version, shape or field set.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace cauchynet
