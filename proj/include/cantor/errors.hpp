#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

/// Malformed rational text or zero denominator at parse time.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Zero denominator on construction, or division by zero.
struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A point or parameter lies outside the domain an operation accepts.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Structural inconsistency in a value handed to a constructor or checker.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Gap address outside [0, 2^(level-1)).
struct AddressError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// An operation was called on an input that violates its precondition.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace cantor
