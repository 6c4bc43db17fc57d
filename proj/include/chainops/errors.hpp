#pragma once

#include <stdexcept>
#include <string>

namespace chainops {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element, tuple or code lies outside the chain / arity it was used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A value type was built from inconsistent data (wrong table length, bad permutation, invalid g-map).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input that does not satisfy its documented hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A binary relation read off a table is not a linear order.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A scan would exceed its configured evaluation or population bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Unknown gallery entry or suite name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Malformed NOP / ordering / g-map text. Carries the 1-based position of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace chainops
