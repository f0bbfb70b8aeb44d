#pragma once

#include <stdexcept>
#include <string>

namespace leveler {

// Base of every error raised by the library. The CLI maps each subclass to
// a distinct exit status.
class LevelerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file or plan data.
class ParseError : public LevelerError {
 public:
  ParseError(const std::string& what, std::size_t row, std::size_t column)
      : LevelerError(what + " (row " + std::to_string(row) + ", column " +
                     std::to_string(column) + ")"),
        row_(row),
        column_(column) {}

  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

// Structurally invalid value (bad dimensions, negative hours, shift on an
// empty cell, ...).
class ValidationError : public LevelerError {
 public:
  using LevelerError::LevelerError;
};

// A transfer violates -A[j+1] <= x[j] <= A[j].
class ConstraintError : public LevelerError {
 public:
  ConstraintError(const std::string& what, std::size_t boundary)
      : LevelerError(what), boundary_(boundary) {}
  std::size_t boundary() const { return boundary_; }

 private:
  std::size_t boundary_;
};

// Transfers are inside the bounds but leave some month with negative load.
class FeasibilityError : public LevelerError {
 public:
  FeasibilityError(const std::string& what, std::size_t month)
      : LevelerError(what), month_(month) {}
  std::size_t month() const { return month_; }

 private:
  std::size_t month_;
};

// A shift would move an item outside the planning year.
class BoundaryError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Bisection needs a month count divisible by four.
class UnsupportedLengthError : public LevelerError {
 public:
  using LevelerError::LevelerError;
};

// An oracle refused an instance outside its budget.
class BudgetExceededError : public LevelerError {
 public:
  using LevelerError::LevelerError;
};

}  // namespace leveler
