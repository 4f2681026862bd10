#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace explab {

// Base of every error raised by the library. kind() is a stable identifier
// used by the CLI when reporting failures as JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& message)
      : Error("dimension_mismatch", message) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("parse_error", "line " + std::to_string(line) + ", column " +
                                 std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NotUnimodularError : public Error {
 public:
  explicit NotUnimodularError(const std::string& message)
      : Error("not_unimodular", message) {}
};

class ZeroTargetError : public Error {
 public:
  ZeroTargetError() : Error("zero_target", "target vector must be nonzero") {}
};

class NotInImageError : public Error {
 public:
  explicit NotInImageError(const std::string& message)
      : Error("not_in_image", message) {}

 protected:
  NotInImageError(std::string kind, const std::string& message)
      : Error(std::move(kind), message) {}
};

// The target lies in the rational image but has no integer preimage.
// Carries the rational expansion value at that target as context.
class NotInIntegerImageError : public NotInImageError {
 public:
  NotInIntegerImageError(const std::string& message, std::string rational_value)
      : NotInImageError("not_in_integer_image", message),
        rational_value_(std::move(rational_value)) {}

  const std::string& rational_value() const noexcept { return rational_value_; }

 private:
  std::string rational_value_;
};

class CapExceededError : public Error {
 public:
  explicit CapExceededError(const std::string& message)
      : Error("cap_exceeded", message) {}
};

// Supremum over an empty set of targets (the map has zero image).
class UndefinedSupremumError : public Error {
 public:
  UndefinedSupremumError()
      : Error("undefined_supremum",
              "expansion constant is undefined: the map has zero image") {}
};

class NotPrimeError : public Error {
 public:
  explicit NotPrimeError(const std::string& message)
      : Error("not_prime", message) {}
};

class RowShapeError : public Error {
 public:
  RowShapeError(const std::string& message, std::size_t row)
      : Error("row_shape", message), row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class CochainError : public Error {
 public:
  explicit CochainError(const std::string& message)
      : Error("cochain_condition", message) {}
};

}  // namespace explab
