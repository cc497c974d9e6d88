#pragma once

#include <stdexcept>
#include <string>

namespace cdlat {

// Bad arguments or malformed input. The CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input exceeded a configured limit (order cap, coset limit, subgroup
// cap). The message names the limit that was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency failure. Seeing one of these means a bug in this
// library, not bad input.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Syntax error in the presentation DSL or a catalog file, with position.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, int line, int column)
      : UsageError(what + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cdlat
