#pragma once

#include <stdexcept>
#include <string>

namespace braidhom {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scalars or matrices from different coefficient fields were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// A pair of differentials does not compose to zero.
class ComplexIntegrityError : public Error {
 public:
  explicit ComplexIntegrityError(const std::string& what) : Error(what) {}
};

// An enumeration exceeded its configured state-space limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Input data violates an algebraic axiom (cocycle, rack, closure).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace braidhom
