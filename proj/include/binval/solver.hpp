#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <utility>
#include <vector>

#include "binval/bit_string.hpp"
#include "binval/complexity_table.hpp"
#include "binval/instance.hpp"

namespace binval::sim {

enum class NodeState { active, flip_all_pending, done };

/// One independent piece of the problem: a set of positions, the set of weight
/// ranks living on them, and how many of those ranks the current bits miss.
struct SubproblemNode {
  std::uint64_t id = 0;
  std::vector<std::uint32_t> positions;
  std::vector<std::uint32_t> ranks;
  std::uint32_t mismatches = 0;
  std::vector<std::uint8_t> reference;  // bits at `positions`, same order
  NodeState state = NodeState::active;
};

struct QueryLog {
  std::vector<std::pair<BitString, MatchMask>> queries;
  std::size_t total = 0;
  std::size_t initial_distance = 0;
};

struct SolveOptions {
  /// Checks node partitioning and toggle attribution against the hidden
  /// instance after every round; throws std::logic_error on a violation.
  bool check_invariants = false;
};

/// Runs the split-table solver against `instance` until the optimum is queried.
///
/// The first query is uniformly random. Each later round issues one combined
/// query: every active node flips a uniformly random s*(|P|, d') subset of its
/// positions, flip-all-pending nodes flip everything, done nodes keep their bits.
/// The answer splits each active node into the flipped part (whose ranks are
/// exactly those whose match bit toggled) and the rest.
///
/// Node randomness comes from derive_seed(seed, node id), so the log depends on
/// (instance, table, seed) only.
QueryLog solve(const ProblemInstance& instance, const dp::ComplexityTable& table,
               std::uint64_t seed, const SolveOptions& options = {});

/// True iff every mask matches evaluate() and the last query is the optimum.
bool replay_check(const QueryLog& log, const ProblemInstance& instance);

/// One `bits<TAB>mask_bits` line per query.
void write_log(const QueryLog& log, std::ostream& out);
void write_log(const QueryLog& log, const std::filesystem::path& path);

}  // namespace binval::sim
