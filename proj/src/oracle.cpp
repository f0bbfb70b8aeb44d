#include "leveler/oracle.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

#include "leveler/errors.hpp"

namespace leveler {

namespace {

Rational month_deviation(Objective objective, Hours load, const Rational& mean) {
  const Rational d = Rational(load) - mean;
  return objective == Objective::L1 ? abs(d) : d * d;
}

// Costs are kept scaled by n (L1) or n^2 (quadratic) so the search runs on
// integers; the optimum is converted back to an exact rational at the end.
class TransferSearch {
 public:
  TransferSearch(const MonthlyLoads& loads, Objective objective, const OracleBudget& budget)
      : loads_(loads),
        objective_(objective),
        budget_(budget),
        n_(static_cast<Hours>(loads.months())),
        total_(loads.total()),
        x_(loads.months() - 1, 0) {}

  void run() { descend(0, 0, 0); }

  bool found() const { return best_cost_.has_value(); }
  Rational best_cost() const {
    const Hours scale = objective_ == Objective::L1 ? n_ : n_ * n_;
    return Rational(*best_cost_, scale);
  }
  const std::vector<Hours>& best() const { return best_; }
  std::uint64_t visited() const { return visited_; }

 private:
  Hours month_cost(Hours load) const {
    const Hours d = n_ * load - total_;
    return objective_ == Objective::L1 ? (d < 0 ? -d : d) : d * d;
  }

  // x_[0..b-1] fixed; months 0..b-1 are settled and cost `partial`.
  void descend(std::size_t b, Hours inflow, Hours partial) {
    if (++visited_ > budget_.max_states)
      throw BudgetExceededError("transfer oracle exceeded " +
                                std::to_string(budget_.max_states) + " states");
    const std::size_t last = loads_.months() - 1;
    if (b == last) {
      const Hours final_load = loads_[last] + inflow;
      if (final_load < 0) return;
      const Hours cost = partial + month_cost(final_load);
      if (!best_cost_ || cost < *best_cost_) {
        best_cost_ = cost;
        best_ = x_;
      }
      return;
    }
    for (Hours v = -loads_[b + 1]; v <= loads_[b]; ++v) {
      const Hours month = loads_[b] - v + inflow;
      if (month < 0) break;  // larger v only lowers the month further
      const Hours cost = partial + month_cost(month);
      if (best_cost_ && cost > *best_cost_) continue;
      x_[b] = v;
      descend(b + 1, v, cost);
    }
  }

  const MonthlyLoads& loads_;
  Objective objective_;
  const OracleBudget& budget_;
  Hours n_;
  Hours total_;
  std::vector<Hours> x_;
  std::vector<Hours> best_;
  std::optional<Hours> best_cost_;
  std::uint64_t visited_ = 0;
};

bool index_set_less(std::uint32_t a, std::uint32_t b) {
  // Both masks have the same popcount; compare ascending index lists.
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace

SolveResult brute_force_transfers(const MonthlyLoads& loads, Objective objective,
                                  const OracleBudget& budget) {
  if (loads.months() < 2) throw ValidationError("need at least two months");
  if (loads.months() > budget.max_transfer_months)
    throw BudgetExceededError("transfer oracle handles at most " +
                              std::to_string(budget.max_transfer_months) + " months");
  for (Hours a : loads.values())
    if (a > budget.max_month_load)
      throw BudgetExceededError("transfer oracle handles monthly loads up to " +
                                std::to_string(budget.max_month_load));

  TransferSearch search(loads, objective, budget);
  search.run();
  // x = 0 is always feasible, so an optimum exists.
  SolveResult result;
  result.transfers = TransferVector{search.best()};
  result.objective_value = search.best_cost();
  result.method = Method::Exact;
  result.optimal = true;
  result.visited = search.visited();
  return result;
}

ShiftSearchResult brute_force_shifts(const AnnualPlan& plan, Objective objective,
                                     const OracleBudget& budget) {
  const std::size_t k = plan.items();
  const std::size_t n = plan.months();
  if (k * n > budget.max_shift_cells)
    throw BudgetExceededError("shift oracle handles at most " +
                              std::to_string(budget.max_shift_cells) + " cells");

  struct Cell {
    std::size_t item, month;
    std::vector<int> options;  // ascending
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (plan.at(i, j) == 0) continue;
      Cell c{i, j, {}};
      if (j > 0) c.options.push_back(-1);
      c.options.push_back(0);
      if (j + 1 < n) c.options.push_back(1);
      cells.push_back(std::move(c));
    }

  const Rational mean = Rational(plan.total(), static_cast<Hours>(n));
  std::vector<std::size_t> choice(cells.size(), 0);
  ShiftMatrix current(k, n);
  for (const auto& c : cells) current.set(c.item, c.month, c.options[0]);

  std::optional<ShiftSearchResult> best;
  std::uint64_t visited = 0;
  // Odometer with the last cell fastest enumerates row-major lexicographic
  // order, so the first optimum seen is the smallest.
  while (true) {
    if (++visited > budget.max_states)
      throw BudgetExceededError("shift oracle exceeded " + std::to_string(budget.max_states) +
                                " states");
    std::vector<Hours> sums(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j)
        sums[static_cast<std::size_t>(static_cast<int>(j) + current.at(i, j))] += plan.at(i, j);
    Rational value = 0;
    for (Hours s : sums) value += month_deviation(objective, s, mean);
    if (!best || value < best->objective_value) best = ShiftSearchResult{current, value, 0};

    std::size_t pos = cells.size();
    while (pos > 0) {
      --pos;
      if (++choice[pos] < cells[pos].options.size()) break;
      choice[pos] = 0;
    }
    if (cells.empty() || (pos == 0 && choice[0] == 0)) break;
    for (std::size_t c = pos; c < cells.size(); ++c)
      current.set(cells[c].item, cells[c].month, cells[c].options[choice[c]]);
  }
  best->visited = visited;
  return *best;
}

Selection brute_force_subset(const SelectionProblem& problem, const OracleBudget& budget) {
  problem.validate();
  const std::size_t count = problem.items.size();
  if (count > budget.max_subset_items)
    throw BudgetExceededError("subset oracle handles at most " +
                              std::to_string(budget.max_subset_items) + " items");

  std::uint32_t best_mask = 0;
  Hours best_sum = 0;
  int best_count = 0;
  const std::uint32_t end = std::uint32_t{1} << count;
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    Hours sum = 0;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (std::uint32_t{1} << i)) sum += problem.items[i];
    if (sum > problem.capacity) continue;
    const int size = std::popcount(mask);
    const bool better = sum > best_sum || (sum == best_sum && size < best_count) ||
                        (sum == best_sum && size == best_count && index_set_less(mask, best_mask));
    if (better) {
      best_mask = mask;
      best_sum = sum;
      best_count = size;
    }
  }

  Selection selection;
  selection.sum = best_sum;
  for (std::size_t i = 0; i < count; ++i)
    if (best_mask & (std::uint32_t{1} << i)) selection.indices.push_back(i);
  return selection;
}

}  // namespace leveler
