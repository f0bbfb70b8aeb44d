#pragma once

#include <span>
#include <string>
#include <vector>

#include "leveler/plan_model.hpp"

namespace leveler {

/// Slack-variable encoding of the quadratic leveling problem as
///
///   max z = c.v + v'Dv   subject to   M v = rhs,  v >= 0
///
/// with v = (offset, lifted_1..lifted_m, upper_1..upper_m, lower_1..lower_m)
/// and m = n - 1 boundaries. A transfer is x_i = lifted_i - offset, and the
/// box bound -A[i+1] <= x_i <= A[i] becomes
///
///   x_i + upper_i = A[i],   -x_i + lower_i = A[i+1].
///
/// The coefficients are expanded from the squared deviation V so that
/// z(v) = constant_offset - V(x(v)) holds exactly, where constant_offset is
/// the sum of squared shifted loads.
struct StandardFormQP {
  std::vector<Hours> loads;
  MeanLoad mean;
  std::vector<Rational> shifted_loads;  // A[j] - mean
  std::vector<Rational> linear;         // c, one per variable
  std::vector<std::vector<Rational>> quadratic;  // D, symmetric
  std::vector<std::vector<Hours>> constraints;   // M, 2m rows
  std::vector<Hours> rhs;
  Rational constant_offset;
  std::vector<std::string> variable_names;

  std::size_t boundaries() const { return loads.size() - 1; }
  std::size_t variables() const { return linear.size(); }

  static constexpr std::size_t offset_index() { return 0; }
  std::size_t lifted_index(std::size_t i) const { return 1 + i; }
  std::size_t upper_slack_index(std::size_t i) const { return 1 + boundaries() + i; }
  std::size_t lower_slack_index(std::size_t i) const { return 1 + 2 * boundaries() + i; }

  /// Canonical non-negative lift: offset = max(0, -min x), slacks from the
  /// equality rows.
  std::vector<Hours> lift(const TransferVector& x) const;

  /// Recovers x_i = lifted_i - offset.
  TransferVector project(std::span<const Hours> v) const;

  /// c.v + v'Dv.
  Rational objective(std::span<const Hours> v) const;

  bool satisfies_constraints(std::span<const Hours> v) const;
};

StandardFormQP standard_form(const MonthlyLoads& loads);

}  // namespace leveler
