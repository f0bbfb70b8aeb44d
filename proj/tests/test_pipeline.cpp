#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "leveler/errors.hpp"
#include "leveler/pipeline.hpp"
#include "leveler/plan_io.hpp"
#include "random_instances.hpp"

using namespace leveler;
namespace fs = std::filesystem;

namespace {

const char* const kPaperCsv = "10,20,30,40\n5,8,6,6\n21,11,3,2\n14,1,5,3\n";

struct Workspace {
  fs::path root;
  Workspace() {
    static int counter = 0;
    root = fs::temp_directory_path() /
           ("leveler_pipeline_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(root);
    fs::create_directories(root);
  }
  ~Workspace() { fs::remove_all(root); }

  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(root / name, std::ios::binary) << text;
    return root / name;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cli(const std::string& args) {
  const std::string cmd = std::string(LEVELER_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

ShiftMatrix read_shifts(const fs::path& p) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) {
    std::vector<int> row;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) row.push_back(std::stoi(cell));
    rows.push_back(std::move(row));
  }
  return ShiftMatrix(std::move(rows));
}

nlohmann::json report(const fs::path& dir) { return nlohmann::json::parse(slurp(dir / "report.json")); }

}  // namespace

TEST_CASE("exact method on the worked example") {
  Workspace ws;
  const auto input = ws.write("plan.csv", kPaperCsv);
  const auto out = ws.root / "out";
  REQUIRE(cli("--input " + input.string() + " --output-dir " + out.string() +
              " --method exact --objective l1") == 0);
  const auto r = report(out);
  CHECK(r["objective_after"] == "3/2");
  CHECK(r["objective_before"] == "17");
  CHECK(r["input"]["mean"] == "185/4");
  CHECK(r["input"]["column_sums"] == nlohmann::json::array({50, 40, 44, 51}));
  CHECK(r["optimal"] == true);
  CHECK(r["transfers"] == nlohmann::json::array({3, -3, -5}));
  CHECK(fs::exists(out / "adjusted_plan.csv"));
  CHECK(fs::exists(out / "shifts.csv"));
}

TEST_CASE("greedy method on the worked example") {
  Workspace ws;
  const auto input = ws.write("plan.csv", kPaperCsv);
  const auto out = ws.root / "out";
  REQUIRE(cli("--input " + input.string() + " --output-dir " + out.string() +
              " --method greedy --objective l1") == 0);
  CHECK(report(out)["transfers"] == nlohmann::json::array({4, -2, -4}));
  CHECK(report(out)["optimal"] == false);
}

TEST_CASE("verify attaches a matching oracle block") {
  Workspace ws;
  const auto input = ws.write("plan.csv", "3,0,1\n0,2,0\n2,0,4\n");
  const auto out = ws.root / "out";
  REQUIRE(cli("--input " + input.string() + " --output-dir " + out.string() + " --verify") == 0);
  const auto r = report(out);
  REQUIRE(r.contains("oracle"));
  CHECK(r["oracle"]["match"] == true);
  CHECK(r["oracle"]["solver_gap"] == "0");
  REQUIRE(r["oracle"].contains("shift_search"));

  // Heuristic runs still compare the oracle against the exact solver.
  const auto out2 = ws.root / "out2";
  REQUIRE(cli("--input " + input.string() + " --output-dir " + out2.string() +
              " --verify --method greedy --objective quadratic") == 0);
  CHECK(report(out2)["oracle"]["match"] == true);
}

TEST_CASE("report numbers can be recomputed from the emitted files") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 12));
    const AnnualPlan plan = testing::random_plan(rng, k, n, 30);
    PipelineOptions options;
    options.config.objective = trial % 2 ? Objective::Quadratic : Objective::L1;
    options.config.method = static_cast<Method>(trial % 3);
    const PipelineOutcome outcome = run_pipeline(plan, options);

    Workspace ws;
    write_outputs(ws.root, outcome, false);
    const AnnualPlan emitted = parse_plan(ws.root / "adjusted_plan.csv").plan;
    const auto r = report(ws.root);
    const DeviationReport d = deviations(column_sums(emitted));
    CHECK(r["adjusted_plan"]["l1"] == to_string(d.l1));
    CHECK(r["adjusted_plan"]["quadratic"] == to_string(d.quadratic));
    CHECK(r["objective_before"] == to_string(evaluate(options.config.objective, column_sums(plan))));

    const AnnualPlan shifts_applied = apply_shift_matrix(plan, read_shifts(ws.root / "shifts.csv"));
    CHECK(shifts_applied == emitted);

    for (const auto& b : r["boundaries"]) {
      const Hours requested = b["requested"];
      CHECK(b["residual"].get<Hours>() == (requested < 0 ? -requested : requested) - b["achieved"].get<Hours>());
    }
  }
}

TEST_CASE("bisection on a non-quarter year falls back to exact") {
  PipelineOptions options;
  options.config.method = Method::Bisection;
  const PipelineOutcome outcome = run_pipeline(AnnualPlan({{1, 5, 2}}), options);
  CHECK(outcome.report["method"] == "bisection");
  CHECK(outcome.report["method_used"] == "exact");
  CHECK(outcome.report.contains("fallback_reason"));
}

TEST_CASE("realization-only mode") {
  Workspace ws;
  const auto input = ws.write("plan.csv", kPaperCsv);
  const auto out = ws.root / "out";
  REQUIRE(cli("--input " + input.string() + " --output-dir " + out.string() +
              " --shifts-only --transfers=4,-2,-4") == 0);
  const auto r = report(out);
  CHECK(r["method_used"] == "given");
  CHECK(r["transfers"] == nlohmann::json::array({4, -2, -4}));
  CHECK(r["objective_after"] == "3/2");
}

TEST_CASE("identical runs produce identical bytes") {
  Workspace ws;
  const auto input = ws.write("plan.csv", "month_1,month_2,month_3,month_4\n" + std::string(kPaperCsv));
  const auto a = ws.root / "a";
  const auto b = ws.root / "b";
  for (const auto& dir : {a, b})
    REQUIRE(cli("--input " + input.string() + " --output-dir " + dir.string() +
                " --method bisection --objective quadratic") == 0);
  for (const char* name : {"adjusted_plan.csv", "shifts.csv", "report.json"})
    CHECK(slurp(a / name) == slurp(b / name));
  CHECK(slurp(a / "adjusted_plan.csv").starts_with("month_1,month_2,month_3,month_4\n"));
}

TEST_CASE("exit statuses") {
  Workspace ws;
  const auto good = ws.write("good.csv", kPaperCsv);
  const auto ragged = ws.write("ragged.csv", "1,2\n3\n");
  const auto big = ws.write("big.csv", "1,2,3,4,5,6,7,8,9,10,11,12\n");
  const std::string out = " --output-dir " + (ws.root / "out").string();

  CHECK(cli("--input " + ragged.string() + out) == kExitParse);
  CHECK(cli("--input " + (ws.root / "missing.csv").string() + out) == kExitParse);
  CHECK(cli("--input " + good.string() + out + " --months 12") == kExitParse);
  CHECK(cli("--input " + good.string() + out + " --months 4") == kExitOk);
  CHECK(cli("--input " + good.string() + out + " --shifts-only --transfers=60,0,0") == kExitInfeasible);
  CHECK(cli("--input " + good.string() + out + " --shifts-only --transfers=1,2") == kExitInfeasible);
  CHECK(cli("--input " + big.string() + out + " --verify") == kExitBudget);
  CHECK(cli("--input " + good.string() + out + " --method simplex") == kExitBadFlags);
  CHECK(cli("--input " + good.string() + out + " --shifts-only") == kExitBadFlags);
  CHECK(cli("--input " + good.string() + out + " --shifts-only --transfers=a,b") == kExitBadFlags);
  CHECK(cli(out) == kExitBadFlags);
}

TEST_CASE("transfer list parsing") {
  CHECK(parse_transfer_list("4,-2,-4").x == std::vector<Hours>{4, -2, -4});
  CHECK(parse_transfer_list(" 7 ").x == std::vector<Hours>{7});
  CHECK_THROWS_AS(parse_transfer_list("4,,2"), ValidationError);
}
