#pragma once

#include <stdexcept>
#include <string>

namespace qtk {

// Zero denominator in a field operation or a specialization.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed user input: bad partitions, unparsable expressions, bad flags.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed; always indicates an arithmetic bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A computation would exceed the configured degree guard.
class DegreeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qtk
