#pragma once

#include <stdexcept>
#include <string>

namespace dhankel {

/// Argument outside the mathematical domain of an operation (|w| >= 1, p <= 2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input too large for an exact enumeration.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A hypothesis required by the operation does not hold for the given input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dhankel
