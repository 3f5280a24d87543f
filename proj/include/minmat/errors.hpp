#pragma once

#include <stdexcept>
#include <string>

namespace minmat {

/// Bad arguments: out-of-range sizes, empty increment lists, malformed flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request that is well-formed but too expensive to run (exponential brute force above its cap).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal arithmetic guarantee failed, e.g. a division that must be exact left a remainder.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minmat
