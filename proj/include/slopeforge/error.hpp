#pragma once

#include <stdexcept>
#include <string>

namespace slopeforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word, catalog, or numeric input text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must live on the same surface do not.
class GenusMismatch : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside the range an operation is defined on.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A word that must represent the identity on homology does not.
class NotTrivialError : public Error {
 public:
  using Error::Error;
};

/// Positional substitution found a different subword than the relator side.
class SubstitutionMismatch : public Error {
 public:
  using Error::Error;
};

/// sigma + e is not divisible by 4, so chi_h is not an integer.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// Search bound reached without meeting the tolerance.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace slopeforge
