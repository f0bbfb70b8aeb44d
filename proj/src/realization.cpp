#include "leveler/realization.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "leveler/errors.hpp"

namespace leveler {

void SelectionProblem::validate() const {
  if (capacity < 0) throw ValidationError("negative selection capacity");
  for (Hours a : items)
    if (a <= 0) throw ValidationError("selection items must be positive");
}

Selection subset_select(const SelectionProblem& problem) {
  problem.validate();
  const std::size_t count = problem.items.size();
  const Hours all = std::accumulate(problem.items.begin(), problem.items.end(), Hours{0});
  const auto cap = static_cast<std::size_t>(std::min(problem.capacity, all));
  const std::size_t width = cap + 1;
  constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  // fewest[i * width + s]: fewest items among i..N-1 summing to exactly s.
  std::vector<std::uint32_t> fewest((count + 1) * width, kUnreachable);
  fewest[count * width] = 0;
  for (std::size_t i = count; i-- > 0;) {
    const auto a = static_cast<std::size_t>(problem.items[i]);
    const std::uint32_t* next = &fewest[(i + 1) * width];
    std::uint32_t* cur = &fewest[i * width];
    for (std::size_t s = 0; s < width; ++s) {
      cur[s] = next[s];
      if (s >= a && next[s - a] != kUnreachable) cur[s] = std::min(cur[s], next[s - a] + 1);
    }
  }

  std::size_t best = cap;
  while (fewest[best] == kUnreachable) --best;  // s = 0 is always reachable

  // Taking the earliest item that still completes an optimal selection yields
  // the lexicographically smallest index set of that size.
  Selection selection;
  selection.sum = static_cast<Hours>(best);
  std::size_t remaining = best;
  std::uint32_t need = fewest[best];
  for (std::size_t i = 0; i < count && need > 0; ++i) {
    const auto a = static_cast<std::size_t>(problem.items[i]);
    if (remaining >= a && fewest[(i + 1) * width + remaining - a] == need - 1) {
      selection.indices.push_back(i);
      remaining -= a;
      --need;
    }
  }
  return selection;
}

TransferVector RealizationResult::achieved_transfers(const TransferVector& requested) const {
  TransferVector signed_moves;
  for (std::size_t j = 0; j < achieved.size(); ++j)
    signed_moves.x.push_back(requested.x[j] < 0 ? -achieved[j] : achieved[j]);
  return signed_moves;
}

RealizationResult realize_transfers(const AnnualPlan& plan, const TransferVector& x) {
  check_transfers(column_sums(plan), x);
  const std::size_t n = plan.months();
  ShiftMatrix shifts(plan.items(), n);
  std::vector<std::vector<bool>> taken(plan.items(), std::vector<bool>(n, false));
  std::vector<Hours> achieved(n - 1, 0);
  std::vector<Hours> residuals(n - 1, 0);

  for (std::size_t j = 0; j + 1 < n; ++j) {
    const Hours volume = x.x[j];
    if (volume == 0) continue;
    const std::size_t donor = volume > 0 ? j : j + 1;
    const int direction = volume > 0 ? 1 : -1;

    SelectionProblem problem;
    problem.capacity = volume > 0 ? volume : -volume;
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < plan.items(); ++i) {
      if (plan.at(i, donor) > 0 && !taken[i][donor]) {
        rows.push_back(i);
        problem.items.push_back(plan.at(i, donor));
      }
    }
    const Selection chosen = subset_select(problem);
    for (std::size_t k : chosen.indices) {
      shifts.set(rows[k], donor, direction);
      taken[rows[k]][donor] = true;
    }
    achieved[j] = chosen.sum;
    residuals[j] = problem.capacity - chosen.sum;
  }

  AnnualPlan adjusted = apply_shift_matrix(plan, shifts);
  return RealizationResult{std::move(shifts), std::move(achieved), std::move(residuals),
                           std::move(adjusted)};
}

}  // namespace leveler
