#pragma once

#include <stdexcept>
#include <string>

namespace linecong {

/// Syntax or semantic error in a congruence file or expression. Positions
/// are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(format(line, column, message)),
        line_(line),
        column_(column),
        detail_(message) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(int line, int column, const std::string& message) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + message;
  }

  int line_;
  int column_;
  std::string detail_;
};

enum class MathErrorKind {
  domain,          // sqrt of a non-positive value, division by zero, ...
  rank_deficient,  // moving basis columns (nearly) dependent
  not_tangent,     // map derivative does not lie in the span of the basis
  singular,        // quantity undefined on a singular set
  precondition,    // operation called outside its stated scope
};

class MathError : public std::runtime_error {
 public:
  MathError(MathErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  MathErrorKind kind() const noexcept { return kind_; }

 private:
  MathErrorKind kind_;
};

}  // namespace linecong
