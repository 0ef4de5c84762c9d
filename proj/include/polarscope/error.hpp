#pragma once

#include <stdexcept>
#include <string>

namespace polarscope {

/// Bad arguments to a constructor or operation (illegal field, illegal Table row, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data that parses but does not describe what it claims to (e.g. a
/// generator file whose members are not generators of the declared space).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or search would exceed the configured desk-scale budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polarscope
