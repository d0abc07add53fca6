#pragma once

#include <stdexcept>
#include <string>

namespace tourlab {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (.trn or matrix files, vertex lists).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An order or size exceeds what an operation supports.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument does not hold.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The input lacks structure the operation requires (e.g. a transitive set).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed. Always an implementation bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace tourlab
