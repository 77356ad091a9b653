#pragma once

#include <filesystem>
#include <iosfwd>

#include "binval/complexity_table.hpp"

namespace binval::dp {

// Text format:
//   binval-etable v1 <exact|f64> <n_max>
//   n d E [s_opt]          one row per cell, n ascending then d ascending
// E is `num/den` in exact mode and a hexadecimal float literal in f64 mode;
// s_opt is omitted for d = 0 and d = n.

void save_table(const ComplexityTable& table, std::ostream& out);
void save_table(const ComplexityTable& table, const std::filesystem::path& path);

/// Throws ParseError carrying the offending line number.
ComplexityTable load_table(std::istream& in);
ComplexityTable load_table(const std::filesystem::path& path);

}  // namespace binval::dp
