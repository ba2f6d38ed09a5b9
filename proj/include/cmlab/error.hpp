#pragma once

#include <stdexcept>
#include <string>

namespace cmlab {

// Every failure the library raises on bad input derives from Error; the CLI
// maps all of them to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input violates a mathematical precondition (not a CM group, not a CM type...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

// Raised when a computation contradicts a statement that is supposed to be a
// theorem; never swallowed.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cmlab
