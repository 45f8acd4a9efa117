#pragma once

#include <stdexcept>

namespace quivmod {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact division left a remainder where an honest polynomial was required.
struct NotPolynomialError : Error {
  using Error::Error;
};

struct ZeroDenominatorError : Error {
  using Error::Error;
};

// A value that must be an integer (an Euler characteristic) came out fractional.
struct NonIntegerResultError : Error {
  using Error::Error;
};

// Some nonzero proper sub-dimension-vector pairs to zero with the target,
// so the moduli problem is not of coprime type.
struct CoprimalityViolationError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// Malformed command-line input; maps to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace quivmod
