#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace comgraph {

// Malformed input that never reached the algebra: bad dimensions, out-of-range
// ids, mismatched semiring tags.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration or memory bound would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on mathematical content does not hold (central endpoint,
// entire semiring where a zero divisor is required, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace comgraph
