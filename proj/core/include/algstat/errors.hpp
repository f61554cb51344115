#pragma once

#include <stdexcept>
#include <string>

namespace algstat {

/// Base class for user-facing errors (bad arguments, scale exceeded). The CLI
/// maps these to exit status 2.
class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnrecordedCondition : public UserError {
 public:
  using UserError::UserError;
};

/// Projected table size exceeds the configured memory ceiling.
class ResourceLimit : public UserError {
 public:
  using UserError::UserError;
};

/// Requested construction does not fit the configured desk scale.
class ScaleError : public UserError {
 public:
  using UserError::UserError;
};

class PreconditionError : public UserError {
 public:
  using UserError::UserError;
};

/// An internal law was observed to fail. The CLI maps these to exit status 1.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace algstat
