#ifndef TWWKIT_ERRORS_HPP
#define TWWKIT_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace twwkit {

/// Base of every error the library reports for bad input or exhausted budgets.
/// Internal invariant failures use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text document. `line` is 1-based; `column` is 1-based or 0 when
/// the format is line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  int line_;
  int column_;
};

/// Parameters that do not make sense for the requested operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A width certificate (sequence, expression, decomposition) that does not
/// describe the graph it is paired with, or violates its own invariants.
class InvalidCertificate : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search or enumeration ran past its configured budget.
/// Carries whatever bounds were established before stopping.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::optional<int> lower = {},
                 std::optional<int> upper = {})
      : Error(what), lower_(lower), upper_(upper) {}

  std::optional<int> lower_bound() const { return lower_; }
  std::optional<int> upper_bound() const { return upper_; }

 private:
  std::optional<int> lower_;
  std::optional<int> upper_;
};

}  // namespace twwkit

#endif  // TWWKIT_ERRORS_HPP
