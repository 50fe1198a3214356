#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relcx {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line and column of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An operation was called on input that violates its stated precondition
/// (uncovered relation, non-free face, poset with a singleton component, ...).
/// `kind()` is a stable machine-readable tag; `witness()` names the offending
/// labels when there are any.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string kind, const std::string& message,
                    std::vector<std::string> witness = {})
      : Error(kind + ": " + message), kind_(std::move(kind)), witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::string kind_;
  std::vector<std::string> witness_;
};

}  // namespace relcx
