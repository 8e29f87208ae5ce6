#pragma once

#include <stdexcept>
#include <string>

namespace overlap {

/// An exhaustive enumeration would exceed its configured size cap.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int required, int budget)
      : std::runtime_error(what + " (needs " + std::to_string(required) + ", budget " +
                           std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}

  int required() const { return required_; }
  int budget() const { return budget_; }

 private:
  int required_;
  int budget_;
};

/// Malformed complex, map, or norm. Parsers attach the 1-based line number.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// A map violates a general-position precondition (coincident images, a
/// polyline vertex on a triangulation vertex, ...).
class GeneralPositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace overlap
