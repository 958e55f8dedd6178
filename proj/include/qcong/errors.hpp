#pragma once

#include <stdexcept>
#include <string>

namespace qcong {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad caller input: out-of-range residue, zero modulus, non-prime p, ...
struct ArgumentError : Error {
  using Error::Error;
};

struct IncompatibleModulusError : Error {
  using Error::Error;
};

struct NotInvertibleError : Error {
  using Error::Error;
};

// A theorem hypothesis (Legendre condition, lower bound on p) is violated.
struct EligibilityError : ArgumentError {
  using ArgumentError::ArgumentError;
};

// An offset formula did not produce an integer.
struct IntegralityError : ArgumentError {
  using ArgumentError::ArgumentError;
};

// A verification would need more coefficients than are available or allowed.
struct OrderShortfallError : ArgumentError {
  using ArgumentError::ArgumentError;
};

}  // namespace qcong
