#pragma once

#include <stdexcept>
#include <string>

namespace carlitz {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mathematically invalid input: non-prime characteristic,
// reducible modulus, parse failures, mixing values from different fields.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Division by zero, inverting zero, discrete log of zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size limit would be exceeded; nothing was attempted.
class GuardrailError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold did not (for example a Carlitz binomial that
// failed to divide exactly). Always indicates a bug.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace carlitz
