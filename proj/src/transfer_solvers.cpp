#include "leveler/transfer_solvers.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "leveler/errors.hpp"

namespace leveler {

namespace {

constexpr Hours kInfeasible = std::numeric_limits<Hours>::max() / 4;

// Deviation of one month scaled to an integer: n*a - total, then |.| or ^2.
// Dividing the chain sum by n (L1) or n^2 (quadratic) gives the objective.
struct MonthCost {
  Objective objective;
  Hours months;
  Hours total;

  Hours operator()(Hours load) const {
    if (load < 0) return kInfeasible;
    const Hours d = load * months - total;
    return objective == Objective::L1 ? (d < 0 ? -d : d) : d * d;
  }

  Rational unscale(Hours scaled) const {
    return objective == Objective::L1 ? Rational(scaled, months)
                                      : Rational(scaled, months * months);
  }
};

struct Range {
  Hours lo;
  Hours hi;
  std::size_t size() const { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1); }
};

std::vector<Range> box_ranges(const MonthlyLoads& loads) {
  std::vector<Range> ranges;
  for (std::size_t j = 0; j + 1 < loads.months(); ++j)
    ranges.push_back({-loads[j + 1], loads[j]});
  return ranges;
}

void require_months(const MonthlyLoads& loads) {
  if (loads.months() < 2) throw ValidationError("need at least two months");
}

struct ChainSolution {
  std::vector<Hours> x;
  Hours scaled_cost;
  std::uint64_t visited;
};

// Exact minimization over x[b] in ranges[b] (already inside the box bounds)
// with every adjusted month non-negative. Returns nullopt if no x exists.
std::optional<ChainSolution> solve_chain(const MonthlyLoads& loads, const MonthCost& cost,
                                         const std::vector<Range>& ranges) {
  const std::size_t n = loads.months();
  const std::size_t m = n - 1;
  for (const auto& r : ranges)
    if (r.size() == 0) return std::nullopt;

  std::uint64_t visited = 0;
  // tail[b][v - lo_b]: cheapest cost of months b+1..n-1 given x[b] = v.
  std::vector<std::vector<Hours>> tail(m);
  tail[m - 1].resize(ranges[m - 1].size());
  for (std::size_t k = 0; k < tail[m - 1].size(); ++k) {
    const Hours v = ranges[m - 1].lo + static_cast<Hours>(k);
    tail[m - 1][k] = cost(loads[n - 1] + v);
    ++visited;
  }
  for (std::size_t b = m - 1; b-- > 0;) {
    const Range& cur = ranges[b];
    const Range& next = ranges[b + 1];
    tail[b].assign(cur.size(), kInfeasible);
    for (std::size_t k = 0; k < cur.size(); ++k) {
      const Hours v = cur.lo + static_cast<Hours>(k);
      // Month b+1 keeps A - w + v >= 0, so w <= A + v.
      const Hours w_hi = std::min(next.hi, loads[b + 1] + v);
      Hours best = kInfeasible;
      for (Hours w = next.lo; w <= w_hi; ++w) {
        const Hours rest = tail[b + 1][static_cast<std::size_t>(w - next.lo)];
        ++visited;
        if (rest >= kInfeasible) continue;
        const Hours c = cost(loads[b + 1] - w + v);
        if (c >= kInfeasible) continue;
        best = std::min(best, c + rest);
      }
      tail[b][k] = best;
    }
  }

  // Forward reconstruction takes the smallest value attaining the optimum
  // at every stage, which yields the lexicographically smallest optimum.
  std::vector<Hours> x(m);
  Hours total = kInfeasible;
  for (std::size_t k = 0; k < ranges[0].size(); ++k) {
    const Hours v = ranges[0].lo + static_cast<Hours>(k);
    const Hours c = cost(loads[0] - v);
    if (c >= kInfeasible || tail[0][k] >= kInfeasible) continue;
    if (c + tail[0][k] < total) {
      total = c + tail[0][k];
      x[0] = v;
    }
  }
  if (total >= kInfeasible) return std::nullopt;

  Hours remaining = total - cost(loads[0] - x[0]);
  for (std::size_t b = 1; b < m; ++b) {
    const Range& r = ranges[b];
    const Hours w_hi = std::min(r.hi, loads[b] + x[b - 1]);
    bool found = false;
    for (Hours w = r.lo; w <= w_hi && !found; ++w) {
      const Hours rest = tail[b][static_cast<std::size_t>(w - r.lo)];
      const Hours c = cost(loads[b] - w + x[b - 1]);
      if (rest >= kInfeasible || c >= kInfeasible) continue;
      if (c + rest == remaining) {
        x[b] = w;
        remaining = rest;
        found = true;
      }
    }
    if (!found) throw LevelerError("internal: DP reconstruction lost the optimum");
  }
  return ChainSolution{std::move(x), total, visited};
}

// Whether some completion of the free boundaries keeps every month
// non-negative. Reachable values of x[b] form an interval whose upper end is
// capped by month b's load plus the largest reachable x[b-1].
bool chain_feasible(const MonthlyLoads& loads, const std::vector<Range>& ranges) {
  Hours prev_hi = 0;
  for (std::size_t b = 0; b < ranges.size(); ++b) {
    const Hours hi = std::min(ranges[b].hi, loads[b] + prev_hi);
    if (hi < ranges[b].lo) return false;
    prev_hi = hi;
  }
  return loads[loads.months() - 1] + prev_hi >= 0;
}

SolveResult finish(const MonthlyLoads& loads, const SolverConfig& config, std::vector<Hours> x,
                   Method method, bool optimal, std::uint64_t visited) {
  SolveResult result;
  result.transfers = TransferVector{std::move(x)};
  const MonthlyLoads adjusted = apply_transfers(loads, result.transfers);
  result.objective_value = evaluate(config.objective, adjusted);
  result.method = method;
  result.optimal = optimal;
  result.visited = visited;
  return result;
}

// Fixes boundary `b` to the value that best balances months [first, b] against
// its share of the year, given the other ranges. Smallest value wins ties.
Hours balance_split(const MonthlyLoads& loads, std::vector<Range>& ranges, std::size_t first,
                    std::size_t b, std::uint64_t& visited) {
  const Hours n = static_cast<Hours>(loads.months());
  const Hours span = static_cast<Hours>(b - first + 1);
  Hours block = 0;
  for (std::size_t j = first; j <= b; ++j) block += loads[j];
  if (first > 0) block += ranges[first - 1].lo;  // inflow fixed by earlier split

  const Range allowed = ranges[b];
  std::vector<Hours> candidates;
  for (Hours v = allowed.lo; v <= allowed.hi; ++v) candidates.push_back(v);
  // Imbalance of the block after moving v out: |n*(block - v) - span*total|.
  const auto imbalance = [&](Hours v) {
    const Hours d = n * (block - v) - span * loads.total();
    return d < 0 ? -d : d;
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Hours a, Hours c) { return imbalance(a) < imbalance(c); });
  for (Hours v : candidates) {
    ++visited;
    ranges[b] = {v, v};
    if (chain_feasible(loads, ranges)) return v;
  }
  throw LevelerError("internal: no feasible split value");
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Exact: return "exact";
    case Method::Bisection: return "bisection";
    case Method::Greedy: return "greedy";
  }
  return "?";
}

std::string_view to_string(Objective objective) {
  return objective == Objective::L1 ? "l1" : "quadratic";
}

Method parse_method(std::string_view name) {
  if (name == "exact") return Method::Exact;
  if (name == "bisection") return Method::Bisection;
  if (name == "greedy") return Method::Greedy;
  throw ValidationError("unknown method '" + std::string(name) + "'");
}

Objective parse_objective(std::string_view name) {
  if (name == "l1") return Objective::L1;
  if (name == "quadratic") return Objective::Quadratic;
  throw ValidationError("unknown objective '" + std::string(name) + "'");
}

Hours round_half_toward_zero(const Rational& value) {
  const Hours p = value.numerator() < 0 ? -value.numerator() : value.numerator();
  const Hours q = value.denominator();
  Hours mag = p / q;
  if (2 * (p % q) > q) ++mag;
  return value.numerator() < 0 ? -mag : mag;
}

SolveResult solve_exact(const MonthlyLoads& loads, const SolverConfig& config) {
  require_months(loads);
  const MonthCost cost{config.objective, static_cast<Hours>(loads.months()), loads.total()};
  auto chain = solve_chain(loads, cost, box_ranges(loads));
  if (!chain) throw LevelerError("internal: zero transfer vector rejected");
  SolveResult result = finish(loads, config, std::move(chain->x), Method::Exact, true, chain->visited);
  if (result.objective_value != cost.unscale(chain->scaled_cost))
    throw LevelerError("internal: DP objective disagrees with evaluation");
  return result;
}

SolveResult solve_bisection(const MonthlyLoads& loads, const SolverConfig& config) {
  require_months(loads);
  const std::size_t n = loads.months();
  if (n % 4 != 0)
    throw UnsupportedLengthError("bisection needs a month count divisible by 4, got " +
                                 std::to_string(n));
  const std::size_t quarter = n / 4;
  const std::size_t mid = 2 * quarter - 1;  // boundary after month n/2
  const std::size_t q1 = quarter - 1;
  const std::size_t q3 = 3 * quarter - 1;

  std::uint64_t visited = 0;
  std::vector<Range> ranges = box_ranges(loads);
  balance_split(loads, ranges, 0, mid, visited);
  balance_split(loads, ranges, 0, q1, visited);
  balance_split(loads, ranges, mid + 1, q3, visited);

  const MonthCost cost{config.objective, static_cast<Hours>(n), loads.total()};
  auto chain = solve_chain(loads, cost, ranges);
  if (!chain) throw LevelerError("internal: fixed splits left no feasible interior");
  return finish(loads, config, std::move(chain->x), Method::Bisection, false,
                visited + chain->visited);
}

SolveResult solve_greedy(const MonthlyLoads& loads, const SolverConfig& config) {
  require_months(loads);
  const std::size_t n = loads.months();
  const Rational target = mean_load(loads).value();
  std::vector<Hours> current(loads.values().begin(), loads.values().end());
  std::vector<Hours> x(n - 1, 0);
  std::uint64_t visited = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ++visited;
    const Hours quantum = round_half_toward_zero(Rational(current[i]) - target);
    Hours move = 0;
    if (quantum > 0) {
      // Only hours originally planned in month i may cross into i+1.
      move = std::min(quantum, loads[i]);
    } else if (quantum < 0) {
      move = -std::min(-quantum, loads[i + 1]);
    }
    x[i] = move;
    current[i] -= move;
    current[i + 1] += move;
  }
  return finish(loads, config, std::move(x), Method::Greedy, false, visited);
}

SolveResult solve(const MonthlyLoads& loads, const SolverConfig& config) {
  switch (config.method) {
    case Method::Exact: return solve_exact(loads, config);
    case Method::Bisection: return solve_bisection(loads, config);
    case Method::Greedy: return solve_greedy(loads, config);
  }
  throw ValidationError("unknown method");
}

}  // namespace leveler
