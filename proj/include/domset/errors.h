#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domset {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A vertex id outside the declared vertex range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameters or a violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace domset
