#pragma once

#include <stdexcept>
#include <string>

namespace simpcalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad indices, inconsistent faces, unresolvable names.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search exceeded its configured candidate budget.
class EnumerationLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A diagram that was required to commute does not.
class NonCommutingDiagram : public Error {
 public:
  using Error::Error;
};

/// A sequence of chain maps has a nonzero composite.
class NonZeroComposite : public Error {
 public:
  using Error::Error;
};

/// A tower did not stabilize within the probe window.
class NoStabilization : public Error {
 public:
  using Error::Error;
};

}  // namespace simpcalc
