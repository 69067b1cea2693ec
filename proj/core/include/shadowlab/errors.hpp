#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shadowlab {

/// Category of a caller-side contract violation.
enum class ErrorKind {
  InvalidInput,
  InvalidTarget,
  Overlap,
  Uniformity,
  Order,
  Range,
  Precondition,
  Infeasible,
  LimitExceeded,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Thrown when an operation's precondition does not hold. Internal invariant
/// failures use std::logic_error instead, so callers can tell the two apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input file; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace shadowlab
