#pragma once

#include <stdexcept>
#include <string>

namespace tablelock {

/// Malformed or inconsistent input (bad file, violated precondition on user data).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource limit was exceeded (enumeration budget, search size).
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

/// A consistency check that can only fail through an implementation bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tablelock
