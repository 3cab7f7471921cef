#pragma once

#include <stdexcept>
#include <string>

namespace lowlying {

/// Caller-supplied data violates a precondition (bad word, non-square-free
/// modulus, non-hyperbolic matrix, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap would be exceeded. The message names the cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 128-bit intermediate arithmetic overflowed.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An internal consistency check failed. Never raised for bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lowlying
