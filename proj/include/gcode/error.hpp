#pragma once

#include <stdexcept>
#include <string>

namespace gcode {

// Base class for errors raised by the library that are not plain precondition
// violations (those use std::invalid_argument / std::domain_error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search or enumeration would exceed its configured bound.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace gcode
