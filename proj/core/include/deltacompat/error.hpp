#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deltacompat {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different variable contexts.
class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("operands belong to different variable contexts") {}
};

/// A variable name or index that the context does not declare, or an
/// operation applied to a variable of the wrong block.
class InvalidVariable : public Error {
 public:
  using Error::Error;
};

/// Division by an identically zero polynomial or rational function.
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// An operation whose precondition rules out a zero argument.
class ZeroInput : public Error {
 public:
  using Error::Error;
};

/// Substitution that makes a denominator vanish identically.
class EvaluationSingular : public Error {
 public:
  using Error::Error;
};

/// proper_evaluate ran out of candidate points.
class RetryBudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// Certificate system that fails the compatibility conditions.
class NotCompatible : public Error {
 public:
  using Error::Error;
};

/// A membership claim of the structure theorem failed on an input that
/// passed the compatibility check. Names the step that failed.
class StructureViolation : public Error {
 public:
  StructureViolation(std::string step, const std::string& detail)
      : Error("structure violation in " + step + ": " + detail), step_(std::move(step)) {}
  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

/// Documented size limits (integer factorization bound, lattice dimension).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Expression or document syntax error with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        message_(what),
        line_(line),
        column_(column) {}
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace deltacompat
