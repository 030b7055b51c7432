#pragma once

#include <stdexcept>
#include <string>

namespace krull {

/// Raised when an operation is applied outside its mathematical domain
/// (division by zero, mismatched fields, incoherent data, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an input exceeds the exhaustive-search bounds of an operation.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace krull
