#include "binval/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "binval/errors.hpp"
#include "binval/instance.hpp"
#include "binval/rng.hpp"
#include "binval/solver.hpp"

namespace binval::sim {

namespace {

constexpr std::uint64_t kInstanceStream = 0x1257a9ceULL;

struct Moments {
  std::uint64_t count = 0;
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;

  void add(std::uint64_t x) {
    ++count;
    sum += x;
    sum_sq += x * x;
  }
};

void finish(const Moments& m, double& mean, double& std_error) {
  const double c = static_cast<double>(m.count);
  mean = static_cast<double>(m.sum) / c;
  if (m.count < 2) {
    std_error = std::numeric_limits<double>::infinity();
    return;
  }
  // Integer sums make the centered sum of squares exact up to one rounding.
  const long double centered = static_cast<long double>(m.sum_sq) -
                               static_cast<long double>(m.sum) * m.sum / m.count;
  const double var = static_cast<double>(std::max<long double>(0, centered)) / (c - 1);
  std_error = std::sqrt(var / c);
}

}  // namespace

RunStatistics monte_carlo(int n, std::size_t runs, const dp::ComplexityTable& table, std::uint64_t seed,
                          const MonteCarloOptions& options) {
  if (runs < 1) throw DomainError("monte_carlo requires runs >= 1");
  if (n < 1) throw DomainError("monte_carlo requires n >= 1");
  if (!table.covers(n)) throw TableIncompleteError("monte_carlo: table does not cover n=" + std::to_string(n));
  if (options.log_dir) std::filesystem::create_directories(*options.log_dir);

  std::vector<std::uint32_t> totals(runs);
  std::vector<std::uint32_t> distances(runs);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      const std::uint64_t run_seed = derive_seed(seed, r);
      Rng instance_rng(derive_seed(run_seed, kInstanceStream));
      const ProblemInstance instance = random_instance(static_cast<std::size_t>(n), instance_rng);
      const QueryLog log = solve(instance, table, run_seed);
      totals[r] = static_cast<std::uint32_t>(log.total);
      distances[r] = static_cast<std::uint32_t>(log.initial_distance);
      if (options.log_dir) write_log(log, *options.log_dir / ("run-" + std::to_string(r) + ".log"));
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, runs);
  if (workers == 1) {
    work(0, runs);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (runs + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(runs, w * chunk);
      const std::size_t end = std::min(runs, begin + chunk);
      pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  Moments all;
  std::map<int, Moments> by_d;
  for (std::size_t r = 0; r < runs; ++r) {
    all.add(totals[r]);
    by_d[static_cast<int>(distances[r])].add(totals[r]);
  }
  RunStatistics stats;
  stats.runs = runs;
  finish(all, stats.mean, stats.std_error);
  for (const auto& [d, m] : by_d) {
    DistanceStats ds;
    ds.count = m.count;
    finish(m, ds.mean, ds.std_error);
    stats.per_d.emplace(d, ds);
  }
  return stats;
}

}  // namespace binval::sim
