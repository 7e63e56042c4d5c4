#pragma once

#include <stdexcept>
#include <string>

namespace quot {

/// Malformed or inconsistent input (exit code 2 at the CLI).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConductorMismatch : public InputError {
 public:
  using InputError::InputError;
};

class DivisionByZero : public InputError {
 public:
  using InputError::InputError;
};

/// A configured size or degree bound was exceeded (exit code 3).
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed to hold (exit code 4).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quot
