#pragma once

#include <stdexcept>
#include <string>

namespace stopset {

/// Malformed user input (matrix text, index lists).
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A request that exceeds a configured computational cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A formula produced an impossible value, e.g. a non-exact mandated division.
/// Always an implementation bug, never a user error.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace stopset
