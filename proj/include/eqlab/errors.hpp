#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqlab {

// Input exceeds a fixed capacity (order > 64, catalog caps, oracle ceiling).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Precondition on a caller-supplied value failed.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input. offset is the 0-based byte position of the fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// An internal self-check failed; signals a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eqlab
