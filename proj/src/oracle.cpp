#include "binval/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "binval/errors.hpp"
#include "binval/rng.hpp"

namespace binval::oracle {

namespace {

BitString bits_of(std::uint32_t code, int n) {
  BitString b(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) b.set(p, (code >> p) & 1u);
  return b;
}

std::uint32_t code_of(const BitString& b) {
  std::uint32_t code = 0;
  for (std::size_t p = 0; p < b.size(); ++p)
    if (b[p]) code |= 1u << p;
  return code;
}

std::uint32_t code_of(const MatchMask& m) {
  std::uint32_t code = 0;
  for (std::size_t r = 0; r < m.size(); ++r)
    if (m[r]) code |= 1u << r;
  return code;
}

bool test(const std::vector<std::uint64_t>& set, std::size_t i) { return (set[i / 64] >> (i % 64)) & 1u; }
void put(std::vector<std::uint64_t>& set, std::size_t i) { set[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace

std::size_t BeliefState::size() const {
  std::size_t c = 0;
  for (auto w : consistent) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t GameTreeOracle::BitsHash::operator()(const Bits& b) const noexcept {
  std::uint64_t h = 0;
  for (auto w : b) h = mix64(h ^ w);
  return static_cast<std::size_t>(h);
}

GameTreeOracle::GameTreeOracle(int n, OracleOptions options) : n_(n), options_(options) {
  if (n < 1) throw DomainError("oracle requires n >= 1");
  if (n > std::min(options.max_n, kHardMaxN))
    throw ResourceError("oracle size n=" + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(std::min(options.max_n, kHardMaxN)));

  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::vector<std::uint32_t>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const std::uint32_t points = 1u << n;
  // Instance index = z * n! + permutation index.
  for (std::uint32_t z = 0; z < points; ++z)
    for (const auto& p : perms) {
      instances_.emplace_back(bits_of(z, n), p);
      optimum_code_.push_back(z);
    }
  words_ = (instances_.size() + 63) / 64;

  mask_code_.assign(instances_.size(), std::vector<std::uint32_t>(points));
  for (std::size_t i = 0; i < instances_.size(); ++i)
    for (std::uint32_t x = 0; x < points; ++x)
      mask_code_[i][x] = code_of(evaluate(instances_[i], bits_of(x, n)));

  if (options_.canonicalize) {
    // g = (sigma, m): z'[sigma(p)] = z[p] ^ m[p], rank'[sigma(p)] = rank[p].
    auto perm_index = [&](const std::vector<std::uint32_t>& q) {
      return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    for (const auto& sigma : perms)
      for (std::uint32_t m = 0; m < points; ++m) {
        std::vector<std::uint32_t> map(instances_.size());
        for (std::size_t i = 0; i < instances_.size(); ++i) {
          const auto& inst = instances_[i];
          std::uint32_t z = 0;
          std::vector<std::uint32_t> ranks(n);
          for (int p = 0; p < n; ++p) {
            const bool bit = inst.optimum()[p] != (((m >> p) & 1u) != 0);
            if (bit) z |= 1u << sigma[p];
            ranks[sigma[p]] = inst.rank_of_position()[p];
          }
          map[i] = static_cast<std::uint32_t>(z * perms.size() + perm_index(ranks));
        }
        symmetry_.push_back(std::move(map));
      }
  }
}

BeliefState GameTreeOracle::initial_state() const {
  BeliefState s;
  s.consistent.assign(words_, 0);
  for (std::size_t i = 0; i < instances_.size(); ++i) put(s.consistent, i);
  return s;
}

BeliefState GameTreeOracle::observe(const BeliefState& state, const BitString& query,
                                    const MatchMask& mask) const {
  if (query.size() != static_cast<std::size_t>(n_) || mask.size() != static_cast<std::size_t>(n_))
    throw SizeError("observation size differs from n");
  const std::uint32_t x = code_of(query), m = code_of(mask);
  BeliefState next;
  next.consistent.assign(words_, 0);
  for (std::size_t i = 0; i < instances_.size(); ++i)
    if (test(state.consistent, i) && mask_code_[i][x] == m) put(next.consistent, i);
  if (next.size() == 0) throw DomainError("observation contradicts every remaining instance");
  next.history = state.history;
  next.history.emplace_back(query, mask);
  return next;
}

GameTreeOracle::Bits GameTreeOracle::canonical(const Bits& set) const {
  if (!options_.canonicalize) return set;
  Bits best;
  Bits image(words_);
  for (const auto& map : symmetry_) {
    std::fill(image.begin(), image.end(), 0);
    for (std::size_t i = 0; i < instances_.size(); ++i)
      if (test(set, i)) put(image, map[i]);
    if (best.empty() || image < best) best = image;
  }
  return best;
}

mpq_class GameTreeOracle::optimal_value(const BeliefState& state) {
  if (state.size() == 0) throw DomainError("belief state is empty");
  return value_of(state.consistent);
}

mpq_class GameTreeOracle::value_of(const Bits& set) {
  Bits key;
  if (options_.memoize) {
    key = canonical(set);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < instances_.size(); ++i)
    if (test(set, i)) members.push_back(i);
  const std::uint32_t points = 1u << n_;
  const std::uint32_t full = points - 1;

  mpq_class best;
  bool have_best = false;
  std::vector<Bits> cells(points);
  std::vector<std::size_t> cell_size(points);
  for (std::uint32_t x = 0; x < points; ++x) {
    for (auto& c : cells) c.assign(words_, 0);
    std::fill(cell_size.begin(), cell_size.end(), 0);
    for (auto i : members) {
      const auto m = mask_code_[i][x];
      put(cells[m], i);
      ++cell_size[m];
    }
    if (cell_size[full] == 0 &&
        std::count_if(cell_size.begin(), cell_size.end(), [](std::size_t c) { return c != 0; }) == 1)
      continue;

    mpq_class v = 1;
    for (std::uint32_t m = 0; m < points; ++m) {
      if (m == full || cell_size[m] == 0) continue;
      mpq_class p(mpz_class(cell_size[m]), mpz_class(members.size()));
      p.canonicalize();
      v += p * value_of(cells[m]);
    }
    v.canonicalize();
    if (!have_best || v < best) {
      best = v;
      have_best = true;
    }
  }

  if (options_.memoize) memo_.emplace(std::move(key), best);
  return best;
}

mpq_class conditional_e(int n, int d, const OracleOptions& options) {
  if (d < 0 || d > n) throw DomainError("conditional_e requires 0 <= d <= n");
  GameTreeOracle oracle(n, options);
  if (d == 0) return 0;
  MatchMask mask(static_cast<std::size_t>(n));
  for (int r = d; r < n; ++r) mask.set(r, true);
  const BeliefState state = oracle.observe(oracle.initial_state(), BitString(static_cast<std::size_t>(n)), mask);
  return oracle.optimal_value(state);
}

}  // namespace binval::oracle
