#pragma once

#include <stdexcept>
#include <string>

namespace res3 {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (field specs, polynomials, notation, witness files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Arithmetic misuse: mixed fields, division by zero, bad embeddings.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Weierstrass model that is not minimal at some place.
class NonMinimalError : public Error {
 public:
  using Error::Error;
};

}  // namespace res3
