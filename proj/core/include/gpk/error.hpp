#pragma once

#include <stdexcept>
#include <string>

namespace gpk {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain
// (non-prime modulus, odd Pfaffian index set, malformed matrix file...).
class InputError : public Error {
 public:
  using Error::Error;
};

// A mathematically impossible request: inverting a singular matrix,
// taking the square root of a non-residue.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured bound (retries, Groebner budget, enumeration cap) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An internal self-check failed. Always a bug or a convention mismatch.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpk
