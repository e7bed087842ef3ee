#ifndef SYMGRASS_ERRORS_HPP
#define SYMGRASS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symgrass {

/// Caller broke a precondition: arity mismatch, index out of range, bad
/// permutation, degree over a configured bound. CLI exit code 2.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well formed but mathematically outside the operation's domain,
/// e.g. a non-symmetric element passed to a decomposition. CLI exit code 1.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A computed result contradicts a proven structural fact (a failed
/// re-expansion, a non-exact division that must be exact). CLI exit code 3.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace symgrass

#endif  // SYMGRASS_ERRORS_HPP
