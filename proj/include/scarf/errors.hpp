#pragma once

#include <stdexcept>
#include <string>

namespace scarf {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Rejected input: dimension mismatch, malformed file, violated precondition.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A size guard tripped before an exponential enumeration started.
class ScaleError : public InputError {
public:
  explicit ScaleError(const std::string& what) : InputError(what) {}
};

/// An invariant that should be unreachable was violated; signals a bug
/// rather than bad input.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace scarf
