#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binval {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands whose lengths or sizes must agree do not.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A fitness value that no subset of the known weights sums to.
class InconsistentFitnessError : public Error {
 public:
  using Error::Error;
};

/// A table lookup needs entries the table does not hold.
class TableIncompleteError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a configured size or time budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace binval
