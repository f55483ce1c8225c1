#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wmta {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown semiring name or otherwise invalid configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments violating its precondition
/// (bad tape index, arity mismatch, label-length condition, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for the given semiring.
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the caller's size budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based, 0 when not line-bound.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wmta
