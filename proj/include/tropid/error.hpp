#pragma once

#include <stdexcept>
#include <string>

namespace tropid {

// Base for all recoverable errors raised by the library. The CLI maps these
// to exit code 2 (usage/input error).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible matrix or vector dimensions.
struct ShapeError : Error {
  using Error::Error;
};

// An exhaustive enumeration was refused (order above the supported bound).
struct SizeError : Error {
  using Error::Error;
};

// Malformed textual input.
struct ParseError : Error {
  using Error::Error;
};

// A value outside the operation's domain (zero exponent, nonpositive
// dominance strength, mismatched diagonals, ...).
struct ValueError : Error {
  using Error::Error;
};

}  // namespace tropid
