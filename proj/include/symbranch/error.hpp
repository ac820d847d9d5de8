#pragma once

#include <stdexcept>
#include <string>

namespace symbranch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (malformed shape, duplicate
/// entry, odd shape where an even one is required, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A shape has more rows than the ambient Lie type allows.
class ShapeOutOfType : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A lookup that the theory guarantees to succeed did not.
class NotFound : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; indicates a bug, never bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace symbranch
