#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holdup {

/// Raised when an argument lies outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature could not reach the requested tolerance within its
/// refinement budget.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A root-finding bracket whose endpoints do not straddle a sign change.
class BracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid configuration: bad flags, unknown keys, malformed files.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool ok, std::string_view what) {
  if (!ok) throw DomainError(std::string(what));
}

}  // namespace detail

}  // namespace holdup
