#pragma once

#include <stdexcept>
#include <string>

namespace trop {

// Base for every error raised by the library. Messages use 1-based indices.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(int lhs, int rhs)
      : Error("dimension mismatch: order " + std::to_string(lhs) + " vs order " +
              std::to_string(rhs)) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold (for instance the
// inner blocks of a bordered pair are not orthogonal, or a requested order is
// too large for exhaustive enumeration).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A search hit its node or time cap. The result is inconclusive, never a proof.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace trop
