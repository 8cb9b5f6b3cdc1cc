#pragma once

#include <stdexcept>
#include <string>

namespace msv {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: invalid type, non-reduced word, partition overflow, ...
class InputError : public Error {
 public:
  using Error::Error;
};

// An audit scope whose predicted check count exceeds the configured budget.
class BudgetExceeded : public InputError {
 public:
  using InputError::InputError;
};

// A proven identity failed to hold. Signals a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace msv
