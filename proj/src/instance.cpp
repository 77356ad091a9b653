#include "binval/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "binval/errors.hpp"

namespace binval {

MatchMask::MatchMask(std::size_t n) : matched_(n, 0) {}

MatchMask::MatchMask(std::vector<std::uint8_t> matched) : matched_(std::move(matched)) {
  for (auto& b : matched_) b = b ? 1 : 0;
}

MatchMask MatchMask::from_fitness(const mpz_class& fitness, std::size_t n) {
  if (fitness < 0) throw DomainError("fitness must be non-negative");
  if (n > 0 && mpz_sizeinbase(fitness.get_mpz_t(), 2) > n && fitness != 0)
    throw DomainError("fitness exceeds 2^n - 1");
  MatchMask mask(n);
  for (std::size_t r = 0; r < n; ++r) mask.set(r, mpz_tstbit(fitness.get_mpz_t(), r) != 0);
  return mask;
}

MatchMask MatchMask::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw DomainError("mask may contain only 0 and 1");
    bits.push_back(c == '1');
  }
  return MatchMask(std::move(bits));
}

std::size_t MatchMask::count() const {
  return static_cast<std::size_t>(std::count(matched_.begin(), matched_.end(), 1));
}

mpz_class MatchMask::fitness() const {
  mpz_class value = 0;
  for (std::size_t r = 0; r < matched_.size(); ++r)
    if (matched_[r]) mpz_setbit(value.get_mpz_t(), r);
  return value;
}

std::string MatchMask::to_string() const {
  std::string s(matched_.size(), '0');
  for (std::size_t r = 0; r < matched_.size(); ++r)
    if (matched_[r]) s[r] = '1';
  return s;
}

std::size_t mask_distance(const MatchMask& a, const MatchMask& b) {
  if (a.size() != b.size()) throw SizeError("mask_distance: size mismatch");
  std::size_t count = 0;
  for (std::size_t r = 0; r < a.size(); ++r) count += a[r] != b[r];
  return count;
}

namespace {

void require_permutation(const std::vector<std::uint32_t>& perm, std::size_t n) {
  if (perm.size() != n) throw SizeError("permutation length differs from n");
  std::vector<std::uint8_t> seen(n, 0);
  for (auto r : perm) {
    if (r >= n || seen[r]) throw DomainError("rank assignment is not a permutation");
    seen[r] = 1;
  }
}

}  // namespace

ProblemInstance::ProblemInstance(BitString optimum, std::vector<std::uint32_t> rank_of_position)
    : optimum_(std::move(optimum)), rank_of_position_(std::move(rank_of_position)) {
  require_permutation(rank_of_position_, optimum_.size());
}

ProblemInstance ProblemInstance::from_rank_indexed(
    const BitString& z_by_rank, const std::vector<std::uint32_t>& position_of_rank) {
  const std::size_t n = z_by_rank.size();
  require_permutation(position_of_rank, n);
  BitString optimum(n);
  std::vector<std::uint32_t> rank_of_position(n);
  for (std::uint32_t rank = 0; rank < n; ++rank) {
    const auto pos = position_of_rank[rank];
    rank_of_position[pos] = rank;
    optimum.set(pos, z_by_rank[rank]);
  }
  return ProblemInstance(std::move(optimum), std::move(rank_of_position));
}

MatchMask evaluate(const ProblemInstance& instance, const BitString& query) {
  const std::size_t n = instance.n();
  if (query.size() != n) throw SizeError("evaluate: query length differs from n");
  MatchMask mask(n);
  const auto& ranks = instance.rank_of_position();
  const auto& z = instance.optimum();
  for (std::size_t p = 0; p < n; ++p) mask.set(ranks[p], query[p] == z[p]);
  return mask;
}

ProblemInstance random_instance(std::size_t n, Rng& rng) {
  BitString optimum(n);
  for (std::size_t p = 0; p < n; ++p) optimum.set(p, random_bit(rng));
  std::vector<std::uint32_t> ranks(n);
  for (std::uint32_t i = 0; i < n; ++i) ranks[i] = i;
  shuffle(ranks, rng);
  return ProblemInstance(std::move(optimum), std::move(ranks));
}

std::string format_instance(const ProblemInstance& instance) {
  std::ostringstream out;
  out << instance.n() << ';' << instance.optimum().to_string() << ';';
  const auto& ranks = instance.rank_of_position();
  for (std::size_t p = 0; p < ranks.size(); ++p) out << (p ? "," : "") << ranks[p] + 1;
  return out.str();
}

ProblemInstance parse_instance(std::string_view line) {
  const auto first = line.find(';');
  const auto second = first == std::string_view::npos ? first : line.find(';', first + 1);
  if (second == std::string_view::npos) throw ParseError(1, "expected n;z_bits;pi_list");
  std::size_t n = 0;
  try {
    n = std::stoul(std::string(line.substr(0, first)));
  } catch (const std::exception&) {
    throw ParseError(1, "bad n");
  }
  BitString z = BitString::parse(line.substr(first + 1, second - first - 1));
  if (z.size() != n) throw ParseError(1, "optimum length differs from n");
  std::vector<std::uint32_t> ranks;
  std::string rest(line.substr(second + 1));
  std::istringstream in(rest);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      const unsigned long r = std::stoul(item);
      if (r == 0) throw ParseError(1, "ranks are 1-based");
      ranks.push_back(static_cast<std::uint32_t>(r - 1));
    } catch (const std::logic_error&) {
      throw ParseError(1, "bad rank '" + item + "'");
    }
  }
  try {
    return ProblemInstance(std::move(z), std::move(ranks));
  } catch (const Error& e) {
    throw ParseError(1, e.what());
  }
}

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) throw DomainError("weight vector must be non-empty");
  if (!(w_[0] > 0)) throw DomainError("weights must be positive");
  for (std::size_t i = 0; i + 1 < w_.size(); ++i)
    if (!(w_[i + 1] >= 2 * w_[i])) throw DomainError("weights must at least double");
}

WeightVector WeightVector::powers_of_two(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = std::ldexp(1.0, static_cast<int>(i));
  return WeightVector(std::move(w));
}

double WeightVector::fitness(const MatchMask& mask) const {
  if (mask.size() != w_.size()) throw SizeError("fitness: mask size differs from weights");
  double f = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (mask[i]) f += w_[i];
  return f;
}

MatchMask greedy_decode(const WeightVector& weights, double fitness) {
  const std::size_t n = weights.size();
  const double tol = 1e-9 * weights[n - 1];
  MatchMask mask(n);
  double f = fitness;
  for (std::size_t i = n; i-- > 0;) {
    if (f + tol < weights[i]) continue;
    f -= weights[i];
    mask.set(i, true);
  }
  if (std::abs(f) > tol) throw InconsistentFitnessError("fitness is not a subset sum of the weights");
  return mask;
}

MatchMask greedy_decode(const mpz_class& fitness, std::size_t n) {
  MatchMask mask(n);
  mpz_class f = fitness;
  for (std::size_t i = n; i-- > 0;) {
    mpz_class w;
    mpz_ui_pow_ui(w.get_mpz_t(), 2, i);
    if (f < w) continue;
    f -= w;
    mask.set(i, true);
  }
  if (f != 0) throw InconsistentFitnessError("fitness is not a subset sum of the weights");
  return mask;
}

}  // namespace binval
