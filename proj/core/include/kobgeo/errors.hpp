#pragma once

#include <stdexcept>
#include <string>

namespace kobgeo {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition, parameter constraint or input-format violation.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A pole, overflow, non-finite value or other numeric breakdown.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// An intermediate value left the region a map node is defined on.
class DomainViolation : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace kobgeo
