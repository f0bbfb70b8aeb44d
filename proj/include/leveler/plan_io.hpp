#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "leveler/plan_model.hpp"

namespace leveler {

/// A plan as read from CSV. The header row (month_1,...,month_n) is
/// optional and detected by a non-numeric first row.
struct PlanFile {
  AnnualPlan plan;
  bool has_header = false;
};

/// Throws ParseError with a 1-based row/column on ragged rows, negative or
/// non-integer cells, and empty input.
PlanFile parse_plan(std::istream& in);
PlanFile parse_plan(const std::filesystem::path& path);
PlanFile parse_plan_text(const std::string& text);

void write_plan(std::ostream& out, const AnnualPlan& plan, bool header);
void write_shifts(std::ostream& out, const ShiftMatrix& shifts);

std::string month_header(std::size_t months);

}  // namespace leveler
