#pragma once

#include <stdexcept>
#include <string>

namespace pclab {

// Bad arguments or ill-formed inputs (mapped to exit code 2 in the CLI).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured search/memory budget was exhausted (exit code 3).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed; always a bug (exit code 4).
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

inline void check_invariant(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace pclab
