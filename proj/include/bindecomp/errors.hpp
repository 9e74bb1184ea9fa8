#pragma once

#include <stdexcept>
#include <string>

namespace bindecomp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ideal source text or JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input outside the supported class: non-unital coefficients, unit ideal
/// where a proper ideal is required, non-cellular where cellular is required.
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

/// Exponent or degree arithmetic left the signed 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A quotient that was required to be finite-dimensional is not.
class DimensionError : public UnsupportedInputError {
 public:
  using UnsupportedInputError::UnsupportedInputError;
};

/// Hull was asked for an ideal that is not cellular with a unique minimal
/// prime, or a primary component over a prime that is not associated.
class HullPreconditionError : public UnsupportedInputError {
 public:
  using UnsupportedInputError::UnsupportedInputError;
};

/// A broken internal invariant: a colon ideal that should have been a
/// lattice ideal was not, inconsistent character values, a vector that
/// should lie in a lattice does not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bindecomp
