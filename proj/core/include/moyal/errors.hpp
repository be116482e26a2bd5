#pragma once

#include <stdexcept>
#include <string>

namespace moyal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions disagree, or a dimension is unsupported.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates the invariants of its domain type.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Two Weyl elements built over different skew forms were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed or incompatible file / header / JSON document.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A group sample is not closed under the requested right translation.
class SampleNotClosed : public Error {
 public:
  using Error::Error;
};

/// A lifted function was asked for an orbit point it does not define.
class MissingOrbitPoint : public Error {
 public:
  using Error::Error;
};

}  // namespace moyal
