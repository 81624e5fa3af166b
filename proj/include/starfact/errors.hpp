#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace starfact {

/// Malformed textual input. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// An exhaustive search or enumeration would exceed its configured budget.
class GuardExceeded : public std::runtime_error {
public:
  GuardExceeded(const std::string& what, std::uint64_t guard)
      : std::runtime_error(what + " (guard " + std::to_string(guard) + ")"),
        guard_(guard) {}

  std::uint64_t guard() const noexcept { return guard_; }

private:
  std::uint64_t guard_;
};

/// Input is well-formed but violates a structural precondition
/// (not a minimal transitive factorization, invalid word, bad tree...).
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace starfact
