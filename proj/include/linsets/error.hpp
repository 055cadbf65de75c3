#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linsets {

/// Operands living in different fields, levels or ambient spaces.
class LevelMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (tower strings, polynomials, subspaces, CLI specs).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A full scan would exceed the configured enumeration bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on the number of field elements visited by one full scan.
inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 20;

}  // namespace linsets
