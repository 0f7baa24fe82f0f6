#pragma once

#include <stdexcept>
#include <string>

namespace bimarket {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input. Maps to CLI exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration cap was exceeded. Maps to CLI exit code 2.
class SizeTooLarge : public Error {
 public:
  using Error::Error;
};

class NotAPermutation : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class MatchingNotInTable : public InputError {
 public:
  using InputError::InputError;
};

class MalformedProfile : public InputError {
 public:
  using InputError::InputError;
};

class NotTwoByTwo : public InputError {
 public:
  using InputError::InputError;
};

class DisagreementOutsideHull : public InputError {
 public:
  using InputError::InputError;
};

class EmptyIndividuallyRationalRegion : public InputError {
 public:
  using InputError::InputError;
};

/// Syntactically invalid input text.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Well-formed text whose content violates the file schema.
class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace bimarket
