// Acceptance harness: one PASS/FAIL line per criterion.
// Usage: binval_acceptance [criterion ...]  (no arguments runs all nine)

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "binval/bounds.hpp"
#include "binval/complexity_table.hpp"
#include "binval/instance.hpp"
#include "binval/monte_carlo.hpp"
#include "binval/oracle.hpp"
#include "binval/policy.hpp"
#include "binval/rng.hpp"

using namespace binval;

namespace {

constexpr double kFloatTol = 1e-9;
constexpr double kGridTol = 1e-12;
constexpr double kSigmas = 3.0;
constexpr int kSandwichMaxN = 128;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

const dp::ComplexityTable& float_table() {
  static const auto t = [] {
    dp::TableOptions opts;
    opts.threads = std::max(1u, std::thread::hardware_concurrency());
    return dp::compute_table(kSandwichMaxN, dp::Mode::f64, opts);
  }();
  return t;
}

std::string num(double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

void exact_fixtures(Outcome& o) {
  const auto t = dp::compute_table(3, dp::Mode::exact);
  o.require(t.exact(2, 1) == mpq_class(3, 2), "E(2,1)=" + t.exact(2, 1).get_str() + ", want 3/2");
  o.require(t.exact(3, 1) == mpq_class(7, 3), "E(3,1)=" + t.exact(3, 1).get_str() + ", want 7/3");
  o.require(t.exact(3, 2) == mpq_class(7, 3), "E(3,2)=" + t.exact(3, 2).get_str() + ", want 7/3");
}

void oracle_equivalence(Outcome& o) {
  const auto t = dp::compute_table(3, dp::Mode::exact);
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= n; ++d) {
      const mpq_class v = oracle::conditional_e(n, d);
      o.require(v == t.exact(n, d), "n=" + std::to_string(n) + " d=" + std::to_string(d) + " oracle " +
                                        v.get_str() + " vs " + t.exact(n, d).get_str());
    }
}

void bound_sandwich(Outcome& o) {
  const auto& t = float_table();
  int violations = 0;
  for (int n = 2; n <= kSandwichMaxN; ++n) {
    const double lg = std::log2(static_cast<double>(n));
    const double phi = bounds::phi(n);
    for (int d = 1; d < n; ++d) {
      const double e = t.value(n, d);
      const bool ok = e >= lg + bounds::kLowerConstant - kFloatTol && e <= lg + bounds::kRefinedUpper + kFloatTol &&
                      e <= lg + phi + kFloatTol && e >= lg + bounds::kPracticalLower - kFloatTol;
      if (!ok && ++violations <= 5) o.require(false, "n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  o.detail << " n<=" << kSandwichMaxN << " violations=" << violations;
}

void d_max_scaling(Outcome& o) {
  const auto& t = float_table();
  double prev = -1;
  for (int k = 1; k <= 7; ++k) {
    const double v = bounds::d_max(t, k);
    o.detail << " k" << k << "=" << num(v, 6);
    o.require(v < bounds::kDmaxAtK10, "d_max(" + std::to_string(k) + ") too large");
    o.require(v >= prev, "d_max decreased at k=" + std::to_string(k));
    prev = v;
  }
}

void constants(Outcome& o) {
  const double t0 = bounds::tail(0), t10 = bounds::tail(10), x5 = bounds::xi(5), x6 = bounds::xi(6);
  o.detail << " tail(0)=" << num(t0, 15) << " tail(10)=" << num(t10, 10) << " xi(5)=" << num(x5, 17);
  o.require(std::abs(t0 - bounds::kLogSeriesSum) <= 1e-10, "tail(0)");
  o.require(t10 < bounds::kTailAtK10, "tail(10) >= " + num(bounds::kTailAtK10));
  o.require(std::abs(x5 - 0.11864060660016391) <= 1e-12, "xi(5)");
  o.require(x6 == x5, "xi(6) != xi(5)");
}

void bbc_bracket(Outcome& o) {
  const auto& t = float_table();
  for (int n = 4; n <= kSandwichMaxN; ++n) {
    const double lg = std::log2(static_cast<double>(n));
    const double b = dp::bbc(n, t);
    const double lower = lg + bounds::kBbcLower - 2 * (lg + 2) / std::ldexp(1.0, n);
    const int ceil_lg = std::bit_width(static_cast<unsigned>(n - 1));
    const std::string at = "n=" + std::to_string(n);
    o.require(b >= lower - kFloatTol, at + " below lower");
    o.require(b <= lg + bounds::kBbcUpper + kFloatTol, at + " above upper");
    o.require(b <= ceil_lg + 2 + kFloatTol, at + " above ceil(log2 n)+2");
  }
}

void simulator_statistics(Outcome& o) {
  sim::MonteCarloOptions opts;
  opts.threads = std::max(1u, std::thread::hardware_concurrency());

  const auto t16 = dp::compute_table(16, dp::Mode::exact);
  const auto s16 = sim::monte_carlo(16, 100000, t16, 20240516, opts);
  const double b16 = dp::bbc(16, t16);
  o.detail << " n=16 mean=" << num(s16.mean, 8) << " se=" << num(s16.std_error, 3) << " bbc=" << num(b16, 8)
           << " policy=" << num(sim::policy_bbc(16, t16), 8);
  o.require(std::abs(s16.mean - b16) <= kSigmas * s16.std_error,
            "n=16 off by " + num((s16.mean - b16) / s16.std_error, 3) + " se");

  const auto s8 = sim::monte_carlo(8, 1000000, t16, 20240508, opts);
  for (const auto& [d, ds] : s8.per_d) {
    if (d == 0 || ds.count < 1000) continue;
    const double target = 1 + t16.value(8, d);
    // d = n always takes exactly two queries, so its standard error is zero.
    const double z = ds.std_error > 0 ? (ds.mean - target) / ds.std_error
                                      : (ds.mean == target ? 0.0 : INFINITY);
    o.require(std::abs(z) <= kSigmas, "n=8 d=" + std::to_string(d) + " off by " + num(z, 3) + " se");
  }
}

void auxiliary_inequalities(Outcome& o) {
  for (int t = 1; t <= 20; ++t) {
    o.require(bounds::xi_exact(t + 1) * 3 >= bounds::xi_exact(t), "xi(t+1) < xi(t)/3 at t=" + std::to_string(t));
    o.require(bounds::xi_exact(t + 1) > 0 && bounds::xi_exact(t + 1) < bounds::xi_exact(t),
              "xi not decreasing at t=" + std::to_string(t));
  }
  double prev = -1;
  for (int n = 2; n <= (1 << 16); ++n) {
    const double f = std::log2(static_cast<double>(n)) + bounds::xi(std::bit_width(static_cast<unsigned>(n)) - 1);
    if (f < prev - kGridTol) o.require(false, "f decreases at n=" + std::to_string(n));
    prev = f;
  }
  for (double c : {0.0, 0.5, bounds::kPsiDecreaseMaxC})
    for (int n = 5; n <= 64; ++n)
      for (int d = 2; 2 * d < n; ++d)
        if (bounds::psi(n, d, c) < bounds::psi(n, d + 1, c) - kGridTol)
          o.require(false, "psi decrease n=" + std::to_string(n) + " d=" + std::to_string(d));
  for (int n = 4; n <= 64; ++n) {
    const double half = std::log2(n / 2.0);
    for (double c : {0.0, 0.5, bounds::kPsiLowEndMaxC})
      if (bounds::psi(n, 1, c) < half + c - kGridTol) o.require(false, "psi low end n=" + std::to_string(n));
    for (double c : {0.0, 0.5, bounds::kPsiMidEndMaxC})
      if (bounds::psi(n, (n - 1) / 2, c) < half + c - kGridTol)
        o.require(false, "psi mid end n=" + std::to_string(n));
  }
}

void core_invariants(Outcome& o) {
  Rng rng(9);
  int failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 16);
    const auto inst = random_instance(n, rng);
    BitString a(n), b(n);
    for (std::size_t p = 0; p < n; ++p) {
      a.set(p, random_bit(rng));
      b.set(p, random_bit(rng));
    }
    failures += mask_distance(evaluate(inst, a), evaluate(inst, b)) != hamming(a, b);
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto w = WeightVector::powers_of_two(n);
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
      MatchMask m(n);
      for (std::size_t r = 0; r < n; ++r) m.set(r, (subset >> r) & 1u);
      failures += !(greedy_decode(w, w.fitness(m)) == m);
    }
  }
  o.detail << " failures=" << failures;
  o.require(failures == 0, "core invariant failures");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"exact fixtures", exact_fixtures},
      {"oracle equivalence", oracle_equivalence},
      {"bound sandwich", bound_sandwich},
      {"D_max scaling", d_max_scaling},
      {"constants", constants},
      {"BBC bracket", bbc_bracket},
      {"simulator statistics", simulator_statistics},
      {"auxiliary inequalities", auxiliary_inequalities},
      {"core invariants", core_invariants},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);

  bool all = true;
  for (int id : selected) {
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[id - 1].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d (%s): %s (%.2fs)%s\n", id, criteria[id - 1].first, o.pass ? "PASS" : "FAIL", secs,
                o.detail.str().c_str());
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
