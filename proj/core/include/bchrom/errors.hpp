#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bchrom {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or coloring text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An argument outside the operation's domain (unknown vertex, bad set, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The input graph does not satisfy a structural precondition (girth bound).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal property of an algorithm was found broken at runtime.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The exact search refuses inputs above its configured vertex limit.
class OracleLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace bchrom
