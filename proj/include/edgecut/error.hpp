#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgecut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(format(line, column, what)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& what) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// An operation was called on arguments outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search refused to run because the graph exceeds a size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& cap_name, int cap, int actual)
      : Error("graph has " + std::to_string(actual) + " edges, above the " +
              cap_name + " cap of " + std::to_string(cap)),
        cap_name_(cap_name) {}

  const std::string& cap_name() const noexcept { return cap_name_; }

 private:
  std::string cap_name_;
};

}  // namespace edgecut
