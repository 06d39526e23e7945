#pragma once

#include <stdexcept>
#include <string>

namespace dsu {

// Base for all library errors. The C API maps each subclass to a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input or incompatible operands (mismatched field moduli, malformed text).
class UsageError : public Error {
 public:
  using Error::Error;
};

// A mathematically valid call outside the physical or convergent domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Inverse of a non-invertible field element.
class DivisionError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold exactly (or to tolerance) was violated.
class IdentityError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure failed to bracket or converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsu
