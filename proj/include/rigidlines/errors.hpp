#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rigidlines {

/// Malformed input text. `where` names the offending line or JSON field.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// A construction step that cannot be applied to the current graph.
class StepError : public std::invalid_argument {
 public:
  StepError(std::size_t position, const std::string& what)
      : std::invalid_argument("step " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when an input violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a search that a theorem guarantees to succeed comes up empty.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rigidlines
