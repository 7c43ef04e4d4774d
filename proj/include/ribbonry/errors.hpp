#pragma once

#include <stdexcept>
#include <string>

namespace ribbonry {

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                           what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Raised when a fully covered occupancy is asked for its minimal uncovered cell.
struct NoCellError : std::logic_error {
  using std::logic_error::logic_error;
};

struct NoTilingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UndefinedEntropy : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A relation the construction guarantees failed to hold; always a bug.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ribbonry
