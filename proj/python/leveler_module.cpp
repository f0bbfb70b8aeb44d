#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "leveler/errors.hpp"
#include "leveler/oracle.hpp"
#include "leveler/pipeline.hpp"
#include "leveler/plan_io.hpp"
#include "leveler/plan_model.hpp"
#include "leveler/realization.hpp"
#include "leveler/standard_form.hpp"
#include "leveler/transfer_solvers.hpp"

namespace py = pybind11;
using namespace leveler;

namespace {

using Rows = std::vector<std::vector<Hours>>;

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

py::list fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(fraction(v));
  return out;
}

std::vector<Hours> loads_of(const MonthlyLoads& loads) {
  return {loads.values().begin(), loads.values().end()};
}

SolverConfig config_of(const std::string& objective, const std::string& method) {
  return {parse_objective(objective), parse_method(method), TieBreak::SmallestLexicographic};
}

py::dict solve_result(const SolveResult& r) {
  py::dict d;
  d["transfers"] = r.transfers.x;
  d["objective"] = fraction(r.objective_value);
  d["method"] = std::string(to_string(r.method));
  d["optimal"] = r.optimal;
  d["visited"] = r.visited;
  return d;
}

py::dict selection(const Selection& s) {
  py::dict d;
  d["indices"] = s.indices;
  d["sum"] = s.sum;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Levelling of annual preventive repair plans";

  // Translators run most recently registered first, so bases go first.
  auto& base = py::register_exception<LevelerError>(m, "LevelerError");
  py::register_exception<ParseError>(m, "ParseError", base);
  auto& validation = py::register_exception<ValidationError>(m, "ValidationError", base);
  py::register_exception<BoundaryError>(m, "BoundaryError", validation);
  py::register_exception<ConstraintError>(m, "ConstraintError", base);
  py::register_exception<FeasibilityError>(m, "FeasibilityError", base);
  py::register_exception<UnsupportedLengthError>(m, "UnsupportedLengthError", base);
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError", base);

  m.def("column_sums", [](const Rows& plan) { return loads_of(column_sums(AnnualPlan(plan))); },
        py::arg("plan"), "Total hours per month of a plan.");

  m.def("mean_load", [](const std::vector<Hours>& loads) {
    return fraction(mean_load(MonthlyLoads(loads)).value());
  }, py::arg("loads"), "Exact mean monthly load.");

  m.def("apply_transfers", [](const std::vector<Hours>& loads, const std::vector<Hours>& x) {
    return loads_of(apply_transfers(MonthlyLoads(loads), TransferVector{x}));
  }, py::arg("loads"), py::arg("transfers"));

  m.def("deviation", [](const std::vector<Hours>& loads, const std::string& objective) {
    return fraction(evaluate(parse_objective(objective), MonthlyLoads(loads)));
  }, py::arg("loads"), py::arg("objective") = "l1",
     "Deviation of the loads from their own mean.");

  m.def("apply_shift_matrix", [](const Rows& plan, const std::vector<std::vector<int>>& shifts) {
    return apply_shift_matrix(AnnualPlan(plan), ShiftMatrix(shifts)).rows();
  }, py::arg("plan"), py::arg("shifts"));

  m.def("solve", [](const std::vector<Hours>& loads, const std::string& objective,
                    const std::string& method) {
    const SolverConfig config = config_of(objective, method);
    const MonthlyLoads a(loads);
    switch (config.method) {
      case Method::Exact: return solve_result(solve_exact(a, config));
      case Method::Bisection: return solve_result(solve_bisection(a, config));
      case Method::Greedy: break;
    }
    return solve_result(solve_greedy(a, config));
  }, py::arg("loads"), py::arg("objective") = "l1", py::arg("method") = "exact",
     "Integer boundary transfers levelling the monthly loads.");

  m.def("standard_form", [](const std::vector<Hours>& loads) {
    const StandardFormQP qp = standard_form(MonthlyLoads(loads));
    py::dict d;
    d["variables"] = qp.variable_names;
    d["linear"] = fractions(qp.linear);
    py::list quadratic;
    for (const auto& row : qp.quadratic) quadratic.append(fractions(row));
    d["quadratic"] = quadratic;
    d["constraints"] = qp.constraints;
    d["rhs"] = qp.rhs;
    d["constant_offset"] = fraction(qp.constant_offset);
    d["shifted_loads"] = fractions(qp.shifted_loads);
    return d;
  }, py::arg("loads"), "Coefficients of the quadratic objective in standard form.");

  m.def("subset_select", [](const std::vector<Hours>& items, Hours capacity) {
    return selection(subset_select({items, capacity}));
  }, py::arg("items"), py::arg("capacity"));

  m.def("realize_transfers", [](const Rows& plan, const std::vector<Hours>& x) {
    const RealizationResult r = realize_transfers(AnnualPlan(plan), TransferVector{x});
    py::dict d;
    d["shifts"] = r.shift_matrix.rows();
    d["achieved"] = r.achieved;
    d["residuals"] = r.residuals;
    d["adjusted_plan"] = r.adjusted_plan.rows();
    return d;
  }, py::arg("plan"), py::arg("transfers"), "Move whole items to approximate the transfers.");

  m.def("brute_force_transfers", [](const std::vector<Hours>& loads, const std::string& objective) {
    return solve_result(brute_force_transfers(MonthlyLoads(loads), parse_objective(objective)));
  }, py::arg("loads"), py::arg("objective") = "l1");

  m.def("brute_force_shifts", [](const Rows& plan, const std::string& objective) {
    const ShiftSearchResult r = brute_force_shifts(AnnualPlan(plan), parse_objective(objective));
    py::dict d;
    d["shifts"] = r.shifts.rows();
    d["objective"] = fraction(r.objective_value);
    d["visited"] = r.visited;
    return d;
  }, py::arg("plan"), py::arg("objective") = "l1");

  m.def("brute_force_subset", [](const std::vector<Hours>& items, Hours capacity) {
    return selection(brute_force_subset({items, capacity}));
  }, py::arg("items"), py::arg("capacity"));

  m.def("parse_plan", [](const std::string& text) { return parse_plan_text(text).plan.rows(); },
        py::arg("text"), "Plan rows from CSV text.");

  m.def("run_pipeline", [](const Rows& plan, const std::string& objective, const std::string& method,
                           bool verify) {
    PipelineOptions options;
    options.config = config_of(objective, method);
    options.verify = verify;
    const PipelineOutcome outcome = run_pipeline(AnnualPlan(plan), options);
    return py::module_::import("json").attr("loads")(outcome.report.dump());
  }, py::arg("plan"), py::arg("objective") = "l1", py::arg("method") = "exact",
     py::arg("verify") = false, "Full pipeline; returns the report as a dict.");
}
