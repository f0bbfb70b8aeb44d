#pragma once

#include <cstdint>

#include "leveler/plan_model.hpp"
#include "leveler/realization.hpp"
#include "leveler/transfer_solvers.hpp"

namespace leveler {

// Exhaustive reference searches for desk-sized instances. Each refuses
// instances over its limits with BudgetExceededError instead of truncating.
struct OracleBudget {
  std::uint64_t max_states = 200'000'000;
  std::size_t max_transfer_months = 6;
  Hours max_month_load = 60;
  std::size_t max_shift_cells = 12;
  std::size_t max_subset_items = 20;
};

struct ShiftSearchResult {
  ShiftMatrix shifts;
  Rational objective_value;
  std::uint64_t visited = 0;
};

/// Enumerates integer transfer vectors in lexicographic order, skipping
/// subtrees whose already-fixed months cost more than the incumbent. Returns
/// the lexicographically smallest optimum.
SolveResult brute_force_transfers(const MonthlyLoads& loads, Objective objective,
                                  const OracleBudget& budget = {});

/// Enumerates every valid shift matrix; ties go to the row-major
/// lexicographically smallest matrix.
ShiftSearchResult brute_force_shifts(const AnnualPlan& plan, Objective objective,
                                     const OracleBudget& budget = {});

/// Scans all 2^N subsets with the same tie-break as subset_select.
Selection brute_force_subset(const SelectionProblem& problem, const OracleBudget& budget = {});

}  // namespace leveler
