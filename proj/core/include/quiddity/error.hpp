#pragma once

#include <stdexcept>
#include <string>

namespace quid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad ring spec, length mismatch, precondition violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested closed form or algorithm does not cover this regime.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed its size guard.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace quid
