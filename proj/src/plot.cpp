#include "binval/plot.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "binval/bounds.hpp"
#include "binval/errors.hpp"

namespace binval::cli {

std::vector<PlotRow> plot_rows(const std::vector<int>& n_values, const dp::ComplexityTable& table) {
  std::string missing;
  for (int n : n_values)
    if (!table.covers(n)) missing += (missing.empty() ? "" : ",") + std::to_string(n);
  if (!missing.empty()) throw TableIncompleteError("plot: table lacks n = " + missing);

  std::vector<PlotRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    const double lg = std::log2(static_cast<double>(n));
    const int ceil_lg = n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1));
    rows.push_back({n, dp::bbc(n, table), lg + bounds::kBbcLower, lg + bounds::kBbcUpper, ceil_lg + 2.0});
  }
  return rows;
}

void write_plot(const std::vector<PlotRow>& rows, std::ostream& out) {
  out << "n bbc lower upper ceil\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d %.12g %.12g %.12g %.12g\n", r.n, r.bbc, r.lower, r.upper, r.ceil);
    out << buf;
  }
}

void emit_plot(const std::vector<int>& n_values, const dp::ComplexityTable& table, std::ostream& out) {
  write_plot(plot_rows(n_values, table), out);
}

std::vector<PlotRow> read_plot(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(line_no, "missing header");
  {
    std::istringstream h(line);
    std::string a, b, c, d, e, extra;
    h >> a >> b >> c >> d >> e;
    if (a != "n" || b != "bbc" || c != "lower" || d != "upper" || e != "ceil" || (h >> extra))
      throw ParseError(line_no, "expected header 'n bbc lower upper ceil'");
  }
  std::vector<PlotRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream r(line);
    PlotRow row;
    std::string extra;
    if (!(r >> row.n >> row.bbc >> row.lower >> row.upper >> row.ceil) || (r >> extra))
      throw ParseError(line_no, "expected five columns");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace binval::cli
