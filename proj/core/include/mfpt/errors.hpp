#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mfpt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A factorization or diagonal scaling met a pivot that vanishes at the
/// working precision.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// An input violated a documented precondition of an assembly formula
/// (for example h·e != 0 when the H-form assembly was requested).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// State reduction hit a non-positive censoring denominator or a negative
/// intermediate. Either the chain is reducible or the input is corrupted.
class ReductionError : public Error {
 public:
  ReductionError(const std::string& what, std::size_t level)
      : Error(what), level_(level) {}
  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

/// A rank-one update denominator is zero or not finite.
class PerturbationBreakdown : public Error {
 public:
  PerturbationBreakdown(const std::string& what, std::size_t step)
      : Error(what), step_(step) {}
  /// Zero-based row index of the update that broke down.
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mfpt
