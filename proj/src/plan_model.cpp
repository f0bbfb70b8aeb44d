#include "leveler/plan_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "leveler/errors.hpp"

namespace leveler {

AnnualPlan::AnnualPlan(std::vector<std::vector<Hours>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw ValidationError("plan has no equipment rows");
  const std::size_t n = rows_.front().size();
  if (n < 2) throw ValidationError("plan needs at least two months");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != n)
      throw ValidationError("plan row " + std::to_string(i) + " has " +
                            std::to_string(rows_[i].size()) + " months, expected " +
                            std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      if (rows_[i][j] < 0)
        throw ValidationError("negative hours at item " + std::to_string(i) +
                              ", month " + std::to_string(j));
  }
}

Hours AnnualPlan::total() const {
  Hours sum = 0;
  for (const auto& r : rows_) sum = std::accumulate(r.begin(), r.end(), sum);
  return sum;
}

MonthlyLoads::MonthlyLoads(std::vector<Hours> loads) : loads_(std::move(loads)) {
  for (std::size_t j = 0; j < loads_.size(); ++j)
    if (loads_[j] < 0)
      throw ValidationError("negative load in month " + std::to_string(j));
}

Hours MonthlyLoads::total() const {
  return std::accumulate(loads_.begin(), loads_.end(), Hours{0});
}

ShiftMatrix::ShiftMatrix(std::size_t items, std::size_t months)
    : shifts_(items, std::vector<int>(months, 0)) {}

ShiftMatrix::ShiftMatrix(std::vector<std::vector<int>> shifts) : shifts_(std::move(shifts)) {
  for (const auto& r : shifts_) {
    if (r.size() != shifts_.front().size())
      throw ValidationError("shift matrix rows differ in length");
    for (int s : r)
      if (s < -1 || s > 1) throw ValidationError("shift entry outside {-1, 0, 1}");
  }
}

void ShiftMatrix::set(std::size_t item, std::size_t month, int shift) {
  if (shift < -1 || shift > 1) throw ValidationError("shift entry outside {-1, 0, 1}");
  shifts_[item][month] = shift;
}

bool ShiftMatrix::is_zero() const {
  for (const auto& r : shifts_)
    for (int s : r)
      if (s != 0) return false;
  return true;
}

void ShiftMatrix::validate_against(const AnnualPlan& plan) const {
  if (items() != plan.items() || months() != plan.months())
    throw ValidationError("shift matrix shape does not match plan");
  const std::size_t n = plan.months();
  for (std::size_t i = 0; i < items(); ++i) {
    if (shifts_[i][0] == -1)
      throw BoundaryError("item " + std::to_string(i) + " shifted before the first month");
    if (shifts_[i][n - 1] == 1)
      throw BoundaryError("item " + std::to_string(i) + " shifted past the last month");
    for (std::size_t j = 0; j < n; ++j)
      if (shifts_[i][j] != 0 && plan.at(i, j) == 0)
        throw ValidationError("shift on empty cell (item " + std::to_string(i) +
                              ", month " + std::to_string(j) + ")");
  }
}

MonthlyLoads column_sums(const AnnualPlan& plan) {
  std::vector<Hours> sums(plan.months(), 0);
  for (const auto& r : plan.rows())
    for (std::size_t j = 0; j < r.size(); ++j) sums[j] += r[j];
  return MonthlyLoads(std::move(sums));
}

MeanLoad mean_load(const MonthlyLoads& loads) {
  if (loads.months() == 0) throw ValidationError("mean of zero months");
  return {loads.total(), static_cast<Hours>(loads.months())};
}

void check_transfers(const MonthlyLoads& loads, const TransferVector& x) {
  const std::size_t n = loads.months();
  if (x.boundaries() + 1 != n)
    throw ConstraintError("transfer vector has " + std::to_string(x.boundaries()) +
                              " entries for " + std::to_string(n) + " months",
                          std::min(x.boundaries(), n));
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (x.x[j] > loads[j] || x.x[j] < -loads[j + 1])
      throw ConstraintError("transfer " + std::to_string(x.x[j]) + " at boundary " +
                                std::to_string(j) + " outside [" +
                                std::to_string(-loads[j + 1]) + ", " +
                                std::to_string(loads[j]) + "]",
                            j);
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Hours in = j > 0 ? x.x[j - 1] : 0;
    const Hours out = j + 1 < n ? x.x[j] : 0;
    if (loads[j] - out + in < 0)
      throw FeasibilityError("month " + std::to_string(j) + " would carry negative load", j);
  }
}

MonthlyLoads apply_transfers(const MonthlyLoads& loads, const TransferVector& x) {
  check_transfers(loads, x);
  const std::size_t n = loads.months();
  std::vector<Hours> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Hours in = j > 0 ? x.x[j - 1] : 0;
    const Hours moved = j + 1 < n ? x.x[j] : 0;
    out[j] = loads[j] - moved + in;
  }
  return MonthlyLoads(std::move(out));
}

Rational l1_deviation(const MonthlyLoads& loads, const MeanLoad& mean) {
  if (static_cast<Hours>(loads.months()) != mean.months)
    throw ValidationError("mean was taken over a different month count");
  // Scaled by n so the sum stays integral.
  Hours scaled = 0;
  for (Hours a : loads.values()) {
    const Hours d = a * mean.months - mean.total;
    scaled += d < 0 ? -d : d;
  }
  return Rational(scaled, mean.months);
}

Rational quadratic_deviation(const MonthlyLoads& loads, const TransferVector& x,
                             const MeanLoad& mean) {
  check_transfers(loads, x);
  if (static_cast<Hours>(loads.months()) != mean.months)
    throw ValidationError("mean was taken over a different month count");
  const std::size_t n = loads.months();
  const Rational avg = mean.value();
  Rational v = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Hours prev = i > 0 ? x.x[i - 1] : 0;
    const Rational term = Rational(loads[i]) - avg - x.x[i] + prev;
    v += term * term;
  }
  const Rational last = Rational(loads[n - 1]) - avg + x.x[n - 2];
  v += last * last;
  return v;
}

Rational quadratic_deviation(const MonthlyLoads& loads, const MeanLoad& mean) {
  if (static_cast<Hours>(loads.months()) != mean.months)
    throw ValidationError("mean was taken over a different month count");
  Hours scaled = 0;
  for (Hours a : loads.values()) {
    const Hours d = a * mean.months - mean.total;
    scaled += d * d;
  }
  return Rational(scaled, mean.months * mean.months);
}

DeviationReport deviations(const MonthlyLoads& loads) {
  const MeanLoad mean = mean_load(loads);
  return {l1_deviation(loads, mean), quadratic_deviation(loads, mean)};
}

Rational evaluate(Objective objective, const MonthlyLoads& loads) {
  const MeanLoad mean = mean_load(loads);
  return objective == Objective::L1 ? l1_deviation(loads, mean)
                                    : quadratic_deviation(loads, mean);
}

AnnualPlan apply_shift_matrix(const AnnualPlan& plan, const ShiftMatrix& shifts) {
  shifts.validate_against(plan);
  std::vector<std::vector<Hours>> out(plan.items(), std::vector<Hours>(plan.months(), 0));
  for (std::size_t i = 0; i < plan.items(); ++i)
    for (std::size_t j = 0; j < plan.months(); ++j) {
      const auto dest = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(j) + shifts.at(i, j));
      out[i][dest] += plan.at(i, j);
    }
  return AnnualPlan(std::move(out));
}

}  // namespace leveler
