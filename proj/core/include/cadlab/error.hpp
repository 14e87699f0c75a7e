#pragma once

#include <stdexcept>
#include <string>

namespace cadlab {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition of an algebraic operation violated (wrong degree, bad variable, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A projection polynomial vanished identically over a positive-dimensional cell.
class NotWellOriented : public Error {
 public:
  using Error::Error;
};

/// Computation ran past the deadline installed with ScopedDeadline.
class Timeout : public Error {
 public:
  Timeout() : Error("deadline exceeded") {}
};

/// Input text could not be parsed. `where` is a position ("line:col") or a
/// JSON-pointer path, depending on the format.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace cadlab
