#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chw {

// Base of every exception thrown by the library. The C API maps each
// subclass onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `column` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column = 0)
      : Error(column ? what + " at column " + std::to_string(column) : what),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// A mathematically invalid request: division by zero, singular matrix,
// vector outside the required subspace, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// An invariant the library itself should guarantee was violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace chw
