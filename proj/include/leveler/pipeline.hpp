#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "leveler/oracle.hpp"
#include "leveler/plan_model.hpp"
#include "leveler/realization.hpp"
#include "leveler/transfer_solvers.hpp"

namespace leveler {

// Process exit statuses of the batch CLI.
enum ExitStatus : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitInfeasible = 2,
  kExitBudget = 3,
  kExitBadFlags = 4,
};

struct PipelineOptions {
  SolverConfig config;
  std::optional<std::size_t> months;      // expected month count, validation only
  bool verify = false;                     // attach oracle comparison
  std::optional<TransferVector> transfers; // realization-only mode
  OracleBudget budget;
};

struct PipelineOutcome {
  AnnualPlan adjusted_plan;
  ShiftMatrix shifts;
  nlohmann::ordered_json report;
};

/// Problem 1 then Problem 2 on an in-memory plan; builds the report.
PipelineOutcome run_pipeline(const AnnualPlan& plan, const PipelineOptions& options);

/// Parses "4,-2,-4".
TransferVector parse_transfer_list(const std::string& text);

/// Writes adjusted_plan.csv, shifts.csv and report.json into `dir`.
void write_outputs(const std::filesystem::path& dir, const PipelineOutcome& outcome,
                   bool plan_header);

/// Entry point of the repair-leveler binary. Returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace leveler
