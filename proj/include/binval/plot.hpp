#pragma once

#include <iosfwd>
#include <vector>

#include "binval/complexity_table.hpp"

namespace binval::cli {

struct PlotRow {
  int n = 0;
  double bbc = 0;
  double lower = 0;  // log2 n + 1.1186406
  double upper = 0;  // log2 n + 2.42141558
  double ceil = 0;   // ceil(log2 n) + 2
};

/// Throws TableIncompleteError naming every n the table lacks.
std::vector<PlotRow> plot_rows(const std::vector<int>& n_values, const dp::ComplexityTable& table);

/// Header `n bbc lower upper ceil`, then one row per entry, reals at 12
/// significant digits.
void write_plot(const std::vector<PlotRow>& rows, std::ostream& out);
void emit_plot(const std::vector<int>& n_values, const dp::ComplexityTable& table, std::ostream& out);

std::vector<PlotRow> read_plot(std::istream& in);

}  // namespace binval::cli
