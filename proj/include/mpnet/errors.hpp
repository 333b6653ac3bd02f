#pragma once

#include <stdexcept>
#include <string>

namespace mpnet {

// Error categories used across the library. All inherit from Error so
// callers can catch the whole family or a specific class.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed us arguments that violate a precondition (shapes, ranges,
// missing data). Recoverable by fixing the call site.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A numerical procedure failed to converge or produced a result that does
// not satisfy its contract (e.g. covariance that is not SPD after ridging).
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// A scalar function was applied outside its domain (log of a non-positive
// eigenvalue, pooling a non-SPD node).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A file or byte stream does not match the expected container layout.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace mpnet
