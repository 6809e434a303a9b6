#pragma once

#include <stdexcept>
#include <string>

namespace csfkit {

/// Precondition violated by the caller (bad element, mismatched degree, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input exceeds a configured size cap (degree, edge count, truncation).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Broken internal invariant. Never expected to fire.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace csfkit
