#pragma once

#include <stdexcept>
#include <string>

namespace kostant {

/// Bad input from the caller: malformed algebra names, unknown options.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (root not in the system,
/// collapse set not contained in a base, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed. Seeing this means a bug or a false claim.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kostant
