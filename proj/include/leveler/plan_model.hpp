#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "leveler/rational.hpp"

namespace leveler {

/// Normative annual repair plan: k equipment rows by n month columns of
/// repair hours. Entries are non-negative; k >= 1 and n >= 2.
class AnnualPlan {
 public:
  static constexpr std::size_t kDefaultMonths = 12;

  /// Throws ValidationError when the rows are ragged, empty, shorter than
  /// two months, or contain a negative entry.
  explicit AnnualPlan(std::vector<std::vector<Hours>> rows);

  std::size_t items() const { return rows_.size(); }
  std::size_t months() const { return rows_.front().size(); }

  Hours at(std::size_t item, std::size_t month) const {
    return rows_[item][month];
  }
  const std::vector<Hours>& row(std::size_t item) const { return rows_[item]; }
  const std::vector<std::vector<Hours>>& rows() const { return rows_; }

  Hours total() const;

  friend bool operator==(const AnnualPlan&, const AnnualPlan&) = default;

 private:
  std::vector<std::vector<Hours>> rows_;
};

/// Total hours per month.
class MonthlyLoads {
 public:
  explicit MonthlyLoads(std::vector<Hours> loads);

  std::size_t months() const { return loads_.size(); }
  Hours operator[](std::size_t month) const { return loads_[month]; }
  std::span<const Hours> values() const { return loads_; }
  Hours total() const;

  friend bool operator==(const MonthlyLoads&, const MonthlyLoads&) = default;

 private:
  std::vector<Hours> loads_;
};

/// Exact mean monthly load, total / n.
struct MeanLoad {
  Hours total = 0;
  Hours months = 1;

  Rational value() const { return Rational(total, months); }
};

/// Signed hours moved across each month boundary. x[j] > 0 moves work from
/// month j to j+1, x[j] < 0 moves it from j+1 back to j.
struct TransferVector {
  std::vector<Hours> x;

  std::size_t boundaries() const { return x.size(); }
  friend bool operator==(const TransferVector&, const TransferVector&) = default;
};

/// Per-item shift decision in {-1, 0, +1}, one per plan cell.
class ShiftMatrix {
 public:
  ShiftMatrix(std::size_t items, std::size_t months);
  /// Throws ValidationError on ragged rows or entries outside {-1, 0, +1}.
  explicit ShiftMatrix(std::vector<std::vector<int>> shifts);

  std::size_t items() const { return shifts_.size(); }
  std::size_t months() const { return shifts_.empty() ? 0 : shifts_.front().size(); }

  int at(std::size_t item, std::size_t month) const { return shifts_[item][month]; }
  void set(std::size_t item, std::size_t month, int shift);
  const std::vector<std::vector<int>>& rows() const { return shifts_; }

  bool is_zero() const;

  /// Checks the matrix against a plan: same shape, nothing leaves the year,
  /// and only non-empty cells move.
  void validate_against(const AnnualPlan& plan) const;

  friend bool operator==(const ShiftMatrix&, const ShiftMatrix&) = default;
  friend auto operator<=>(const ShiftMatrix&, const ShiftMatrix&) = default;

 private:
  std::vector<std::vector<int>> shifts_;
};

struct DeviationReport {
  Rational l1;
  Rational quadratic;
};

enum class Objective { L1, Quadratic };

MonthlyLoads column_sums(const AnnualPlan& plan);

MeanLoad mean_load(const MonthlyLoads& loads);

/// Checks -A[j+1] <= x[j] <= A[j] (ConstraintError) and that every adjusted
/// month stays non-negative (FeasibilityError).
void check_transfers(const MonthlyLoads& loads, const TransferVector& x);

/// A'[j] = A[j] - x[j] + x[j-1] with x[-1] = x[n-1] = 0.
MonthlyLoads apply_transfers(const MonthlyLoads& loads, const TransferVector& x);

Rational l1_deviation(const MonthlyLoads& loads, const MeanLoad& mean);

/// Sum of squared deviations of the transferred loads from the mean.
Rational quadratic_deviation(const MonthlyLoads& loads, const TransferVector& x,
                             const MeanLoad& mean);

/// Squared deviation of the loads as given (no transfers).
Rational quadratic_deviation(const MonthlyLoads& loads, const MeanLoad& mean);

DeviationReport deviations(const MonthlyLoads& loads);

Rational evaluate(Objective objective, const MonthlyLoads& loads);

/// Moves each flagged cell's whole hours one month forward (+1) or back (-1).
AnnualPlan apply_shift_matrix(const AnnualPlan& plan, const ShiftMatrix& shifts);

}  // namespace leveler
