#include "binval/solver.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "binval/errors.hpp"
#include "binval/rng.hpp"

namespace binval::sim {

namespace {

constexpr std::uint64_t kFirstQueryStream = 0;

NodeState state_for(std::uint32_t mismatches, std::size_t size) {
  if (mismatches == 0) return NodeState::done;
  if (mismatches == size) return NodeState::flip_all_pending;
  return NodeState::active;
}

void check_partition(const std::vector<SubproblemNode>& nodes, const BitString& last_query) {
  const std::size_t n = last_query.size();
  std::vector<std::uint8_t> pos_seen(n, 0), rank_seen(n, 0);
  for (const auto& node : nodes) {
    if (node.positions.size() != node.ranks.size() || node.reference.size() != node.positions.size())
      throw std::logic_error("node sizes disagree");
    if (node.mismatches > node.positions.size()) throw std::logic_error("mismatch count exceeds node size");
    for (std::size_t i = 0; i < node.positions.size(); ++i) {
      const auto p = node.positions[i];
      if (pos_seen[p]++) throw std::logic_error("position in two nodes");
      if (last_query[p] != (node.reference[i] != 0)) throw std::logic_error("reference differs from last query");
    }
    for (auto r : node.ranks)
      if (rank_seen[r]++) throw std::logic_error("rank in two nodes");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!pos_seen[i] || !rank_seen[i]) throw std::logic_error("nodes do not cover every position and rank");
}

}  // namespace

QueryLog solve(const ProblemInstance& instance, const dp::ComplexityTable& table, std::uint64_t seed,
               const SolveOptions& options) {
  const std::size_t n = instance.n();
  if (!table.covers(static_cast<int>(n)))
    throw TableIncompleteError("solve: table does not cover n=" + std::to_string(n));

  QueryLog log;
  Rng first_rng(derive_seed(seed, kFirstQueryStream));
  BitString query(n);
  for (std::size_t p = 0; p < n; ++p) query.set(p, random_bit(first_rng));
  MatchMask mask = evaluate(instance, query);
  log.queries.emplace_back(query, mask);
  log.initial_distance = n - mask.count();

  std::uint64_t next_id = 1;
  std::vector<SubproblemNode> nodes;
  {
    SubproblemNode root;
    root.id = next_id++;
    for (std::uint32_t i = 0; i < n; ++i) {
      root.positions.push_back(i);
      root.ranks.push_back(i);
      root.reference.push_back(query[i]);
    }
    root.mismatches = static_cast<std::uint32_t>(log.initial_distance);
    root.state = state_for(root.mismatches, n);
    nodes.push_back(std::move(root));
  }

  // Each round shrinks some node or finishes one, so n + 1 rounds always suffice.
  for (std::size_t round = 0; !mask.all(); ++round) {
    if (round > n + 1) throw std::logic_error("solver failed to terminate");

    // Positions flipped by each active node, as indices into node.positions.
    std::vector<std::vector<std::uint32_t>> flipped(nodes.size());
    BitString next = query;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      auto& node = nodes[k];
      if (node.state == NodeState::flip_all_pending) {
        for (auto p : node.positions) next.flip(p);
      } else if (node.state == NodeState::active) {
        const int size = static_cast<int>(node.positions.size());
        const int s = dp::optimal_split(size, static_cast<int>(node.mismatches), table);
        Rng rng(derive_seed(seed, node.id));
        std::vector<std::uint32_t> order(node.positions.size());
        for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
        sample_prefix(order, static_cast<std::size_t>(s), rng);
        order.resize(static_cast<std::size_t>(s));
        std::sort(order.begin(), order.end());
        for (auto i : order) next.flip(node.positions[i]);
        flipped[k] = std::move(order);
      }
    }

    const MatchMask next_mask = evaluate(instance, next);
    log.queries.emplace_back(next, next_mask);

    std::vector<SubproblemNode> updated;
    updated.reserve(nodes.size() * 2);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      auto& node = nodes[k];
      if (node.state == NodeState::done) {
        updated.push_back(std::move(node));
        continue;
      }
      if (node.state == NodeState::flip_all_pending) {
        for (auto& b : node.reference) b ^= 1;
        node.mismatches = 0;
        node.state = NodeState::done;
        updated.push_back(std::move(node));
        continue;
      }

      SubproblemNode in, out;
      in.id = next_id++;
      out.id = next_id++;
      std::vector<std::uint8_t> is_flipped(node.positions.size(), 0);
      for (auto i : flipped[k]) is_flipped[i] = 1;
      for (std::size_t i = 0; i < node.positions.size(); ++i) {
        auto& child = is_flipped[i] ? in : out;
        child.positions.push_back(node.positions[i]);
        child.reference.push_back(next[node.positions[i]]);
      }
      // A rank toggled its match bit exactly when its position was flipped.
      for (auto r : node.ranks) {
        const bool toggled = mask[r] != next_mask[r];
        auto& child = toggled ? in : out;
        child.ranks.push_back(r);
        if (!next_mask[r]) ++child.mismatches;
      }
      if (in.ranks.size() != in.positions.size())
        throw std::logic_error("toggled rank count differs from flip count");
      if (options.check_invariants) {
        for (auto p : in.positions) {
          const auto r = instance.rank_of_position()[p];
          if (std::find(in.ranks.begin(), in.ranks.end(), r) == in.ranks.end())
            throw std::logic_error("flipped position's rank was not attributed to the flipped child");
        }
      }
      in.state = state_for(in.mismatches, in.positions.size());
      out.state = state_for(out.mismatches, out.positions.size());
      updated.push_back(std::move(in));
      updated.push_back(std::move(out));
    }
    nodes = std::move(updated);
    query = next;
    mask = next_mask;
    if (options.check_invariants) check_partition(nodes, query);
  }

  if (options.check_invariants) {
    for (const auto& node : nodes)
      for (std::size_t i = 0; i < node.positions.size(); ++i)
        if ((node.reference[i] != 0) != instance.optimum()[node.positions[i]])
          throw std::logic_error("done node disagrees with the optimum");
  }
  log.total = log.queries.size();
  return log;
}

bool replay_check(const QueryLog& log, const ProblemInstance& instance) {
  if (log.queries.empty() || log.total != log.queries.size()) return false;
  for (const auto& [query, mask] : log.queries) {
    if (query.size() != instance.n() || mask.size() != instance.n()) return false;
    if (!(evaluate(instance, query) == mask)) return false;
  }
  return log.queries.back().first == instance.optimum();
}

void write_log(const QueryLog& log, std::ostream& out) {
  for (const auto& [query, mask] : log.queries) out << query.to_string() << '\t' << mask.to_string() << '\n';
}

void write_log(const QueryLog& log, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_log(log, out);
}

}  // namespace binval::sim
