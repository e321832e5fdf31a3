// Error types shared across the library.  Each maps to a distinct CLI exit
// code: config/input problems exit 2, scale refusals exit 3.
#pragma once

#include <stdexcept>
#include <string>

namespace sigmaforge {

// Malformed input text (group files, sigma specs, corpus manifests).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int col)
      : std::runtime_error(std::move(msg)), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Structurally valid input that cannot be used (unknown catalog name,
// sigma partition that does not cover a needed prime, bad flag combination).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured order cap.  Loud by design:
// callers either raise the cap or treat the result as inconclusive.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violation on an operation (mismatched ambients, non-normal
// kernel, element outside the group).  Indicates a caller bug.
class DomainError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sigmaforge
