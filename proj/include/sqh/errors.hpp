#pragma once

#include <stdexcept>
#include <string>

namespace sqh {

// Bad input: unsupported family/rank, non-dominant weight, dimension mismatch.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Division by zero, exponent overflow, zero denominator after substitution.
struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// limit_hbar_inf on an expression whose numerator outgrows the denominator.
struct LimitError : std::runtime_error {
  LimitError(const std::string& what, int gap) : std::runtime_error(what), degree_gap(gap) {}
  int degree_gap;  // in units of hbar^(1/2)
};

// Weyl group too large for the configured bound, or time cap hit.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural claim that should always hold turned out false.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace sqh
