#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace binval {

// mt19937_64 output is fixed by the standard; distributions are not, so the
// bounded draws below are written out to keep runs identical across libraries.
using Rng = std::mt19937_64;

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of sub-stream `stream` under `seed`. Used per run and per solver node.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream));
}

/// Uniform integer in [0, bound). bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline bool random_bit(Rng& rng) { return (rng() >> 63) != 0; }

/// Moves a uniformly random k-subset of `items` to its front (partial Fisher-Yates).
template <class T>
void sample_prefix(std::vector<T>& items, std::size_t k, Rng& rng) {
  const std::size_t m = items.size();
  for (std::size_t i = 0; i < k && i + 1 < m; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, m - i));
    std::swap(items[i], items[j]);
  }
}

template <class T>
void shuffle(std::vector<T>& items, Rng& rng) {
  sample_prefix(items, items.size(), rng);
}

}  // namespace binval
