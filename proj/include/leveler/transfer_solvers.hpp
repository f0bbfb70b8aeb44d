#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "leveler/plan_model.hpp"

namespace leveler {

enum class Method { Exact, Bisection, Greedy };

// Only one tie-break exists: lexicographically smallest transfer vector.
enum class TieBreak { SmallestLexicographic };

struct SolverConfig {
  Objective objective = Objective::L1;
  Method method = Method::Exact;
  TieBreak tie_break = TieBreak::SmallestLexicographic;
};

struct SolveResult {
  TransferVector transfers;
  Rational objective_value;
  Method method = Method::Exact;
  bool optimal = false;
  std::uint64_t visited = 0;  // DP transitions or enumerated candidates
};

std::string_view to_string(Method method);
std::string_view to_string(Objective objective);
Method parse_method(std::string_view name);
Objective parse_objective(std::string_view name);

/// Globally optimal integer transfers for the configured objective over
/// {-A[j+1] <= x[j] <= A[j], A' >= 0}. The objective is a chain of terms
/// each depending on two consecutive boundaries, so a backward DP over the
/// boundary values is exact. Ties go to the lexicographically smallest x.
SolveResult solve_exact(const MonthlyLoads& loads, const SolverConfig& config);

/// Halves then quarters: fixes the mid-year boundary to balance the halves,
/// then the two quarter boundaries, then solves each quarter's interior
/// boundaries exactly. Requires n divisible by 4 (UnsupportedLengthError).
SolveResult solve_bisection(const MonthlyLoads& loads, const SolverConfig& config);

/// Left-to-right sweep: push the excess over the mean into the next month,
/// or pull a shortfall back from it. The per-month quantum is A[i] - mean
/// rounded half toward zero, clamped to the boundary bounds.
SolveResult solve_greedy(const MonthlyLoads& loads, const SolverConfig& config);

/// Dispatches on config.method.
SolveResult solve(const MonthlyLoads& loads, const SolverConfig& config);

/// Round half toward zero.
Hours round_half_toward_zero(const Rational& value);

}  // namespace leveler
