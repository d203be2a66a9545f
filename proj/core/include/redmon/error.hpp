#pragma once

#include <stdexcept>
#include <string>

namespace redmon {

// Raised when an input violates a mathematical precondition (dimension or
// field mismatch, unsupported kind, non-member input, ...). The message
// names the violated constraint.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace redmon
