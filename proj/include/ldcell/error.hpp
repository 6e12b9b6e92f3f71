#pragma once

#include <stdexcept>
#include <string>

namespace ldcell {

// Base for every error raised by the library. Callers that only need a
// diagnostic can catch this; the CLI maps the subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-conforming dimensions (matrix product, vector lengths).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Invalid parameter values: gains out of order, k = 0, unknown receiver.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A formula or construction was requested outside the regime it holds in.
class RegimeError : public Error {
 public:
  using Error::Error;
};

// Enumeration larger than the configured limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON/CSV input.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace ldcell
