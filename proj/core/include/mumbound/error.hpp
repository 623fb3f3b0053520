#pragma once

#include <stdexcept>
#include <string>

namespace mumbound {

/// Raised when an input violates a documented precondition (range, shape,
/// Hermiticity, normalization).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant fails, e.g. eigensolver non-convergence.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a file cannot be read, parsed or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mumbound
