#pragma once

#include <cstddef>
#include <vector>

#include "leveler/plan_model.hpp"

namespace leveler {

/// Candidate item hours for one boundary and the capacity to fill.
struct SelectionProblem {
  std::vector<Hours> items;  // all > 0
  Hours capacity = 0;

  void validate() const;
};

/// Chosen item indices, ascending.
struct Selection {
  std::vector<std::size_t> indices;
  Hours sum = 0;

  friend bool operator==(const Selection&, const Selection&) = default;
};

struct RealizationResult {
  ShiftMatrix shift_matrix;
  std::vector<Hours> achieved;   // hours actually moved per boundary, unsigned
  std::vector<Hours> residuals;  // |x_j| - achieved_j
  AnnualPlan adjusted_plan;

  /// Achieved moves carrying the sign of the requested transfers.
  TransferVector achieved_transfers(const TransferVector& requested) const;
};

/// 0/1 selection maximizing the selected sum subject to sum <= capacity.
/// Among maximal sums: fewest items, then the lexicographically smallest
/// index set.
Selection subset_select(const SelectionProblem& problem);

/// Realizes each boundary's transfer with whole items, left to right. A
/// forward transfer draws from month j, a backward one from month j+1; a
/// cell moves at most once. Shortfalls are reported as residuals.
RealizationResult realize_transfers(const AnnualPlan& plan, const TransferVector& x);

}  // namespace leveler
