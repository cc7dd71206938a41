#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heckefuse {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closure or brute-force scan exceeded its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Inputs live on different groups, cocycles or double cosets.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A floating-point quantity that must be integral was not.
class NumericalDegradation : public Error {
 public:
  using Error::Error;
};

/// An algebraic identity that the implementation relies on failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace heckefuse
