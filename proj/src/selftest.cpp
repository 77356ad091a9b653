#include "binval/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>

#include "binval/bounds.hpp"
#include "binval/complexity_table.hpp"
#include "binval/instance.hpp"
#include "binval/monte_carlo.hpp"
#include "binval/oracle.hpp"
#include "binval/policy.hpp"
#include "binval/rng.hpp"
#include "binval/solver.hpp"

namespace binval {

namespace {

using Check = std::function<bool()>;

bool bijection_preserved() {
  Rng rng(20190101);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 16);
    const ProblemInstance inst = random_instance(n, rng);
    BitString a(n), b(n);
    for (std::size_t p = 0; p < n; ++p) {
      a.set(p, random_bit(rng));
      b.set(p, random_bit(rng));
    }
    if (mask_distance(evaluate(inst, a), evaluate(inst, b)) != hamming(a, b)) return false;
  }
  return true;
}

bool decode_round_trip() {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto w = WeightVector::powers_of_two(n);
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
      MatchMask m(n);
      for (std::size_t r = 0; r < n; ++r) m.set(r, (subset >> r) & 1u);
      if (!(greedy_decode(w, w.fitness(m)) == m)) return false;
      if (!(greedy_decode(m.fitness(), n) == m)) return false;
    }
  }
  return true;
}

bool exact_table_invariants(const dp::ComplexityTable& t) {
  for (int n = 1; n <= t.complete_rows(); ++n) {
    if (t.exact(n, 0) != 0 || t.exact(n, n) != 1) return false;
    for (int d = 1; d < n; ++d) {
      if (t.exact(n, d) != t.exact(n, n - d)) return false;
      const int s = t.split(n, d);
      if (s <= 0 || s >= n) return false;
      for (int s2 = 1; s2 < n; ++s2) {
        if (dp::e_of_split<mpq_class>(t, n, d, s2) != dp::e_of_split<mpq_class>(t, n, n - d, n - s2)) return false;
        mpq_class total = 0;
        for (int u = std::max(0, s2 + d - n); u <= std::min(s2, d); ++u) total += dp::split_weight(n, d, s2, u).value();
        if (total != 1) return false;
      }
    }
  }
  return t.exact(2, 1) == mpq_class(3, 2) && t.exact(3, 1) == 2 && t.exact(4, 2) == mpq_class(13, 6);
}

bool exact_float_agree(const dp::ComplexityTable& exact, const dp::ComplexityTable& approx) {
  for (int n = 1; n <= exact.complete_rows(); ++n)
    for (int d = 0; d <= n; ++d) {
      if (std::abs(exact.value(n, d) - approx.value(n, d)) > 1e-9) return false;
      if (exact.split(n, d) != approx.split(n, d)) return false;
    }
  return true;
}

bool table_sandwich(const dp::ComplexityTable& t) {
  for (int n = 2; n <= t.complete_rows(); ++n) {
    const auto r = bounds::report(n, t);
    if (!r.holds_phi_upper || !r.holds_refined_upper || !r.holds_practical_lower ||
        !r.holds_bbc_upper || !r.holds_prior_upper)
      return false;
    // The xi-based lower bound fails at n = 3 (E = 2) and holds from n = 4 on.
    if (r.holds_xi_lower != (n != 3)) return false;
  }
  return true;
}

bool oracle_matches(const dp::ComplexityTable& t) {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= n; ++d)
      if (oracle::conditional_e(n, d) != t.exact(n, d)) return false;
  return true;
}

bool constants() {
  return std::abs(bounds::tail(0) - bounds::kLogSeriesSum) <= 1e-10 &&
         std::abs(bounds::xi(5) - 0.11864060660016391) <= 1e-12 && bounds::xi(6) == bounds::xi(5);
}

bool psi_properties() {
  for (double c : {0.0, 0.5, bounds::kPsiDecreaseMaxC})
    for (int n = 5; n <= 64; ++n)
      for (int d = 2; 2 * d < n; ++d)
        if (bounds::psi(n, d, c) < bounds::psi(n, d + 1, c) - 1e-12) return false;
  for (int n = 4; n <= 64; ++n) {
    for (double c : {0.0, 0.5, bounds::kPsiLowEndMaxC})
      if (bounds::psi(n, 1, c) < std::log2(n / 2.0) + c - 1e-12) return false;
    for (double c : {0.0, 0.5, bounds::kPsiMidEndMaxC})
      if (bounds::psi(n, (n - 1) / 2, c) < std::log2(n / 2.0) + c - 1e-12) return false;
  }
  return true;
}

bool simulator_matches_policy(const dp::ComplexityTable& t) {
  const int n = 8;
  const auto stats = sim::monte_carlo(n, 20000, t, 7);
  const double expected = sim::policy_bbc(n, t);
  if (std::abs(stats.mean - expected) > 4 * stats.std_error) return false;
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto inst = random_instance(12, rng);
    sim::SolveOptions opts;
    opts.check_invariants = true;
    if (!sim::replay_check(sim::solve(inst, t, rng(), opts), inst)) return false;
  }
  return true;
}

}  // namespace

bool run_selftest(std::ostream& out) {
  const auto exact = dp::compute_table(24, dp::Mode::exact);
  const auto approx = dp::compute_table(64, dp::Mode::f64);
  const std::pair<const char*, Check> checks[] = {
      {"mask distance equals Hamming distance", bijection_preserved},
      {"greedy decode round trip, n <= 10", decode_round_trip},
      {"exact table invariants, n <= 12", [&] { return exact_table_invariants(dp::compute_table(12, dp::Mode::exact)); }},
      {"exact and f64 tables agree, n <= 24", [&] { return exact_float_agree(exact, approx); }},
      {"bound sandwich, n <= 64", [&] { return table_sandwich(approx); }},
      {"oracle equals table, n <= 3", [&] { return oracle_matches(exact); }},
      {"series and xi constants", constants},
      {"psi monotonicity and endpoints", psi_properties},
      {"simulator matches its policy expectation", [&] { return simulator_matches_policy(exact); }},
  };
  bool all = true;
  for (const auto& [name, check] : checks) {
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      out << "  error: " << e.what() << '\n';
    }
    out << (ok ? "[ok]   " : "[FAIL] ") << name << '\n';
    all = all && ok;
  }
  return all;
}

}  // namespace binval
