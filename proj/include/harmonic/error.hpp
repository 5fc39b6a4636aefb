#pragma once

#include <stdexcept>
#include <string>

namespace harmonic {

/// Argument outside the mathematical domain of an operation (n = 0, ln of a
/// nonpositive interval, division by zero).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enclosure cannot be formed, e.g. dividing by a ball that contains zero
/// or hitting the precision cap while a sign is still undecided.
class EnclosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result outside the representable exponent range.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

class UnknownBound : public std::invalid_argument {
 public:
  explicit UnknownBound(const std::string& id)
      : std::invalid_argument("unknown bound id: " + id) {}
};

}  // namespace harmonic
