#include "leveler/plan_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "leveler/errors.hpp"

namespace leveler {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

bool parses_as_integer(std::string_view cell) {
  Hours value = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  return ec == std::errc{} && ptr == cell.data() + cell.size() && !cell.empty();
}

}  // namespace

std::string month_header(std::size_t months) {
  std::string header;
  for (std::size_t j = 1; j <= months; ++j) {
    if (j > 1) header += ',';
    header += "month_" + std::to_string(j);
  }
  return header;
}

PlanFile parse_plan(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty plan file", 1, 1);

  // Strip a UTF-8 byte order mark.
  if (lines.front().starts_with("\xEF\xBB\xBF")) lines.front().erase(0, 3);

  bool header = false;
  {
    const auto first = split(lines.front());
    for (auto cell : first)
      if (!parses_as_integer(cell)) header = true;
  }

  std::vector<std::vector<Hours>> rows;
  std::size_t width = 0;
  for (std::size_t r = header ? 1 : 0; r < lines.size(); ++r) {
    const std::size_t row_no = r + 1;
    if (trim(lines[r]).empty()) throw ParseError("blank row", row_no, 1);
    const auto cells = split(lines[r]);
    if (header && r == 1) width = split(lines.front()).size();
    if (width == 0) width = cells.size();
    if (cells.size() != width)
      throw ParseError("row has " + std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(width),
                       row_no, std::min(cells.size(), width) + 1);
    std::vector<Hours> row;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto cell = cells[c];
      Hours value = 0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size())
        throw ParseError("cell '" + std::string(cell) + "' is not an integer", row_no, c + 1);
      if (value < 0) throw ParseError("negative hours", row_no, c + 1);
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("plan file has a header but no rows", 2, 1);
  if (width < 2) throw ParseError("plan needs at least two month columns", 1, 1);
  return PlanFile{AnnualPlan(std::move(rows)), header};
}

PlanFile parse_plan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  return parse_plan(in);
}

PlanFile parse_plan_text(const std::string& text) {
  std::istringstream in(text);
  return parse_plan(in);
}

void write_plan(std::ostream& out, const AnnualPlan& plan, bool header) {
  if (header) out << month_header(plan.months()) << '\n';
  for (const auto& row : plan.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << '\n';
  }
}

void write_shifts(std::ostream& out, const ShiftMatrix& shifts) {
  for (const auto& row : shifts.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << '\n';
  }
}

}  // namespace leveler
