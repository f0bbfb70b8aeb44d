#include "leveler/pipeline.hpp"

#include <charconv>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "leveler/errors.hpp"
#include "leveler/plan_io.hpp"

namespace leveler {

namespace {

using nlohmann::ordered_json;

ordered_json deviation_block(const MonthlyLoads& loads) {
  const DeviationReport d = deviations(loads);
  return ordered_json{{"l1", to_string(d.l1)},
                      {"l1_decimal", to_double(d.l1)},
                      {"quadratic", to_string(d.quadratic)},
                      {"quadratic_decimal", to_double(d.quadratic)}};
}

ordered_json oracle_block(const AnnualPlan& plan, const MonthlyLoads& loads,
                          const SolveResult& solved, const PipelineOptions& options,
                          const Rational& realized) {
  const Objective objective = options.config.objective;
  const SolveResult truth = brute_force_transfers(loads, objective, options.budget);
  // Compare against the exact solver even when a heuristic produced the plan.
  const SolveResult exact =
      solved.optimal ? solved : solve_exact(loads, {objective, Method::Exact, TieBreak::SmallestLexicographic});

  ordered_json block;
  block["transfers"] = truth.transfers.x;
  block["objective"] = to_string(truth.objective_value);
  block["visited"] = truth.visited;
  block["match"] = truth.objective_value == exact.objective_value &&
                   truth.transfers == exact.transfers;
  block["solver_gap"] = to_string(solved.objective_value - truth.objective_value);

  if (plan.items() * plan.months() <= options.budget.max_shift_cells) {
    const ShiftSearchResult joint = brute_force_shifts(plan, objective, options.budget);
    block["shift_search"] = ordered_json{
        {"objective", to_string(joint.objective_value)},
        {"shifts", joint.shifts.rows()},
        {"pipeline_gap", to_string(realized - joint.objective_value)},
    };
  }
  return block;
}

}  // namespace

TransferVector parse_transfer_list(const std::string& text) {
  TransferVector x;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string token = text.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.erase(0, 1);
    while (!token.empty() && token.back() == ' ') token.pop_back();
    Hours value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ValidationError("bad transfer value '" + token + "'");
    x.x.push_back(value);
    start = comma + 1;
  }
  return x;
}

PipelineOutcome run_pipeline(const AnnualPlan& plan, const PipelineOptions& options) {
  if (options.months && *options.months != plan.months())
    throw ValidationError("plan has " + std::to_string(plan.months()) + " months, expected " +
                          std::to_string(*options.months));

  const MonthlyLoads loads = column_sums(plan);
  const MeanLoad mean = mean_load(loads);
  const SolverConfig& config = options.config;

  SolveResult solved;
  std::string method_used;
  std::optional<std::string> fallback;
  if (options.transfers) {
    check_transfers(loads, *options.transfers);
    solved.transfers = *options.transfers;
    solved.objective_value = evaluate(config.objective, apply_transfers(loads, solved.transfers));
    solved.method = config.method;
    solved.optimal = false;
    method_used = "given";
  } else {
    try {
      solved = solve(loads, config);
    } catch (const UnsupportedLengthError& e) {
      fallback = e.what();
      solved = solve_exact(loads, {config.objective, Method::Exact, config.tie_break});
    }
    method_used = std::string(to_string(solved.method));
  }

  RealizationResult realized = realize_transfers(plan, solved.transfers);
  const MonthlyLoads after = column_sums(realized.adjusted_plan);
  const Rational realized_value = evaluate(config.objective, after);

  ordered_json report;
  report["input"] = ordered_json{
      {"items", plan.items()},
      {"months", plan.months()},
      {"column_sums", std::vector<Hours>(loads.values().begin(), loads.values().end())},
      {"total", loads.total()},
      {"mean", to_string(mean.value())},
      {"mean_decimal", to_double(mean.value())},
  };
  report["method"] = to_string(config.method);
  report["method_used"] = method_used;
  if (fallback) report["fallback_reason"] = *fallback;
  report["objective"] = to_string(config.objective);
  report["optimal"] = solved.optimal;
  const Rational before = evaluate(config.objective, loads);
  report["objective_before"] = to_string(before);
  report["objective_before_decimal"] = to_double(before);
  report["objective_after"] = to_string(solved.objective_value);
  report["objective_after_decimal"] = to_double(solved.objective_value);
  report["visited"] = solved.visited;
  report["transfers"] = solved.transfers.x;

  ordered_json boundaries = ordered_json::array();
  for (std::size_t j = 0; j < solved.transfers.boundaries(); ++j) {
    boundaries.push_back(ordered_json{{"boundary", j + 1},
                                      {"requested", solved.transfers.x[j]},
                                      {"achieved", realized.achieved[j]},
                                      {"residual", realized.residuals[j]}});
  }
  report["boundaries"] = std::move(boundaries);

  ordered_json adjusted = deviation_block(after);
  adjusted["column_sums"] = std::vector<Hours>(after.values().begin(), after.values().end());
  adjusted["objective_after"] = to_string(realized_value);
  report["adjusted_plan"] = std::move(adjusted);

  if (options.verify)
    report["oracle"] = oracle_block(plan, loads, solved, options, realized_value);

  return PipelineOutcome{std::move(realized.adjusted_plan), std::move(realized.shift_matrix),
                         std::move(report)};
}

void write_outputs(const std::filesystem::path& dir, const PipelineOutcome& outcome,
                   bool plan_header) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "adjusted_plan.csv", std::ios::binary);
    write_plan(out, outcome.adjusted_plan, plan_header);
  }
  {
    std::ofstream out(dir / "shifts.csv", std::ios::binary);
    write_shifts(out, outcome.shifts);
  }
  {
    std::ofstream out(dir / "report.json", std::ios::binary);
    out << outcome.report.dump(2) << '\n';
  }
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Level an annual preventive repair plan across months"};
  std::string input;
  std::string output_dir = ".";
  std::string method = "exact";
  std::string objective = "l1";
  std::optional<std::size_t> months;
  bool verify = false;
  bool shifts_only = false;
  std::string transfers;

  app.add_option("--input", input, "Plan CSV (one row per equipment item)")->required();
  app.add_option("--output-dir", output_dir, "Directory for adjusted_plan.csv, shifts.csv, report.json");
  app.add_option("--method", method, "Transfer solver")
      ->check(CLI::IsMember({"exact", "bisection", "greedy"}));
  app.add_option("--objective", objective, "Deviation measure")
      ->check(CLI::IsMember({"l1", "quadratic"}));
  app.add_option("--months", months, "Expected month count (validation only)");
  app.add_flag("--verify", verify, "Compare against exhaustive oracles");
  app.add_flag("--shifts-only", shifts_only, "Realize the vector given by --transfers");
  app.add_option("--transfers", transfers, "Comma-separated transfer vector, e.g. \"4,-2,-4\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadFlags;
  }

  PipelineOptions options;
  options.verify = verify;
  options.months = months;
  try {
    options.config.method = parse_method(method);
    options.config.objective = parse_objective(objective);
    if (shifts_only != !transfers.empty()) {
      std::cerr << "--shifts-only and --transfers must be given together\n";
      return kExitBadFlags;
    }
    if (shifts_only) options.transfers = parse_transfer_list(transfers);
  } catch (const LevelerError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadFlags;
  }

  try {
    const PlanFile file = parse_plan(std::filesystem::path(input));
    const PipelineOutcome outcome = run_pipeline(file.plan, options);
    write_outputs(output_dir, outcome, file.has_header);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetExceededError& e) {
    std::cerr << "oracle budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ConstraintError& e) {
    std::cerr << "constraint error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const FeasibilityError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const ValidationError& e) {
    // Includes a plan whose month count disagrees with --months.
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  }
  return kExitOk;
}

}  // namespace leveler
