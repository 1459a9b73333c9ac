#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace monideal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              " variables, got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A cross-check between two independent computations disagreed.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Raised from inside long computations once the process deadline passed.
class DeadlineExceeded : public Error {
 public:
  DeadlineExceeded() : Error("deadline exceeded") {}
};

}  // namespace monideal
