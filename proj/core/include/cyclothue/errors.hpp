#pragma once

#include <stdexcept>
#include <string>

namespace cyclothue {

// Raised when an operation is called outside its documented domain
// (wrong modulus, index out of range, inputs that do not satisfy the
// stated hypotheses).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a configured work bound is exhausted before an answer is
// known, e.g. an integer that could not be factored within the allowed
// number of rho iterations.
class ResourceBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal consistency check fails. Seeing this means a bug,
// not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyclothue
