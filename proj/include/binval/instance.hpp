#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "binval/bit_string.hpp"
#include "binval/rng.hpp"

namespace binval {

/// Per-rank match indicator. Rank r (0-based here, r+1 in the usual 1-based
/// numbering) carries weight 2^r, so the mask is the fitness written in binary.
class MatchMask {
 public:
  explicit MatchMask(std::size_t n);
  explicit MatchMask(std::vector<std::uint8_t> matched);

  /// Inverse of fitness(): bit r of the integer becomes rank r.
  static MatchMask from_fitness(const mpz_class& fitness, std::size_t n);
  static MatchMask parse(std::string_view text);

  std::size_t size() const noexcept { return matched_.size(); }
  bool operator[](std::size_t rank) const { return matched_[rank] != 0; }
  void set(std::size_t rank, bool value) { matched_[rank] = value ? 1 : 0; }

  std::size_t count() const;
  bool all() const { return count() == size(); }

  /// sum over matched ranks r of 2^r.
  mpz_class fitness() const;

  /// Rank 1 first.
  std::string to_string() const;

  friend bool operator==(const MatchMask&, const MatchMask&) = default;

 private:
  std::vector<std::uint8_t> matched_;
};

/// Number of ranks on which two masks disagree.
std::size_t mask_distance(const MatchMask& a, const MatchMask& b);

/// A BinVal instance: hidden optimum plus the position-to-rank assignment.
///
/// The optimum is stored by position, and rank_of_position[p] is the weight
/// rank (0-based) of position p. Query bit p matches iff it equals optimum[p].
class ProblemInstance {
 public:
  ProblemInstance(BitString optimum, std::vector<std::uint32_t> rank_of_position);

  /// Builds an instance from the rank-indexed form: z_by_rank[i] is compared
  /// with query bit position_of_rank[i].
  static ProblemInstance from_rank_indexed(const BitString& z_by_rank,
                                           const std::vector<std::uint32_t>& position_of_rank);

  std::size_t n() const noexcept { return optimum_.size(); }
  const BitString& optimum() const noexcept { return optimum_; }
  const std::vector<std::uint32_t>& rank_of_position() const noexcept {
    return rank_of_position_;
  }

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  BitString optimum_;
  std::vector<std::uint32_t> rank_of_position_;
};

MatchMask evaluate(const ProblemInstance& instance, const BitString& query);

/// Uniform optimum and uniform permutation.
ProblemInstance random_instance(std::size_t n, Rng& rng);

/// `n;z_bits;pi_list` with z position-indexed and pi as 1-based ranks by position.
std::string format_instance(const ProblemInstance& instance);
ProblemInstance parse_instance(std::string_view line);

/// Known super-increasing weights: w[i+1] >= 2 w[i], all positive.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> w);
  static WeightVector powers_of_two(std::size_t n);

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }

  /// Sum of the weights of the matched ranks.
  double fitness(const MatchMask& mask) const;

 private:
  std::vector<double> w_;
};

/// Recovers the matched ranks from a real fitness value by scanning weights from
/// the largest down, taking each one that still fits. A residual above
/// 1e-9 * w.back() throws InconsistentFitnessError.
MatchMask greedy_decode(const WeightVector& weights, double fitness);

/// Same scan with exact weights 2^r.
MatchMask greedy_decode(const mpz_class& fitness, std::size_t n);

}  // namespace binval
