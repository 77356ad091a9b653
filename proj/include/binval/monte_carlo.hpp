#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>

#include "binval/complexity_table.hpp"

namespace binval::sim {

struct DistanceStats {
  std::size_t count = 0;
  double mean = 0;
  double std_error = 0;  // +inf when count == 1
};

struct RunStatistics {
  std::size_t runs = 0;
  double mean = 0;
  double std_error = 0;  // +inf when runs == 1
  std::map<int, DistanceStats> per_d;  // keyed by observed initial distance
};

struct MonteCarloOptions {
  unsigned threads = 1;
  /// When set, run r writes its log to <dir>/run-<r>.log.
  std::optional<std::filesystem::path> log_dir;
};

/// Solves `runs` fresh uniform instances. Run r draws its instance and its
/// solver randomness from derive_seed(seed, r), so results do not depend on
/// the thread count. Totals are integers and are summed exactly.
RunStatistics monte_carlo(int n, std::size_t runs, const dp::ComplexityTable& table,
                          std::uint64_t seed, const MonteCarloOptions& options = {});

}  // namespace binval::sim
