#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "binval/bit_string.hpp"
#include "binval/instance.hpp"

namespace binval::oracle {

/// The search is exhaustive; n = 4 (384 instances) is the hard ceiling.
inline constexpr int kHardMaxN = 4;

struct OracleOptions {
  int max_n = 3;
  bool memoize = true;
  /// Memo key is the consistent set reduced modulo position permutations and
  /// XOR shifts; off means the raw set is the key.
  bool canonicalize = true;
};

/// Everything the searcher knows: the instances that agree with every
/// observation so far, plus the observations themselves.
struct BeliefState {
  std::vector<std::uint64_t> consistent;  // bitset over instance indices
  std::vector<std::pair<BitString, MatchMask>> history;

  std::size_t size() const;
};

/// Exact optimal expected query count against a uniform prior over all
/// (optimum, permutation) pairs, by minimizing over every possible next query.
///
/// A query costs 1. Instances whose optimum is the query stop there; the others
/// are split by the mask they produce and the search recurses on each cell.
/// Queries that leave the belief unchanged are skipped since they only add cost.
class GameTreeOracle {
 public:
  explicit GameTreeOracle(int n, OracleOptions options = {});

  int n() const noexcept { return n_; }
  std::size_t instance_count() const noexcept { return instances_.size(); }
  const ProblemInstance& instance(std::size_t i) const { return instances_[i]; }

  BeliefState initial_state() const;
  /// Throws DomainError if no instance is consistent with the observation.
  BeliefState observe(const BeliefState& state, const BitString& query, const MatchMask& mask) const;

  /// Expected number of further queries until the optimum is queried.
  mpq_class optimal_value(const BeliefState& state);

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  using Bits = std::vector<std::uint64_t>;
  struct BitsHash {
    std::size_t operator()(const Bits& b) const noexcept;
  };

  mpq_class value_of(const Bits& set);
  Bits canonical(const Bits& set) const;

  int n_;
  OracleOptions options_;
  std::size_t words_;
  std::vector<ProblemInstance> instances_;
  std::vector<std::uint32_t> optimum_code_;         // by instance
  std::vector<std::vector<std::uint32_t>> mask_code_;  // [instance][query code]
  std::vector<std::vector<std::uint32_t>> symmetry_;   // instance index maps
  std::unordered_map<Bits, mpq_class, BitsHash> memo_;
};

/// Optimal expected further queries after a first query at distance d,
/// using one fixed first query and one fixed mask (the value does not depend on
/// the choice). Throws ResourceError when n exceeds options.max_n.
mpq_class conditional_e(int n, int d, const OracleOptions& options = {});

}  // namespace binval::oracle
