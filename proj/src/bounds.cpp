#include "binval/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <ostream>
#include <vector>

#include "binval/binomial.hpp"
#include "binval/errors.hpp"

namespace binval::bounds {

namespace {

int ceil_log2(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }
int floor_log2(int n) { return std::bit_width(static_cast<unsigned>(n)) - 1; }

double log2_one_plus_pow2(int z) { return std::log1p(std::ldexp(1.0, -z)) / std::log(2.0); }

/// Nearest double to a non-negative rational (mpq_get_d truncates).
double round_to_double(const mpq_class& q) {
  const double lo = q.get_d();
  const double hi = std::nextafter(lo, std::numeric_limits<double>::infinity());
  return abs(q - mpq_class(lo)) <= abs(mpq_class(hi) - q) ? lo : hi;
}

/// 1 / C(n, d) as a double; exact reciprocal so huge binomials give 0 cleanly.
double inv_binomial(int n, int d) {
  mpq_class q(mpz_class(1), binomial(n, d));
  q.canonicalize();
  return round_to_double(q);
}

}  // namespace

double phi(int n) {
  if (n < 1) throw DomainError("phi requires n >= 1");
  double sum = 1.0;
  for (int z = 0; z < ceil_log2(n); ++z) sum += log2_one_plus_pow2(z);
  return sum;
}

mpq_class xi_exact(int t) {
  if (t < 1) throw DomainError("xi requires t >= 1");
  if (t > kXiExactMax) throw ResourceError("xi_exact limited to t <= " + std::to_string(kXiExactMax));
  static std::mutex mutex;
  static std::vector<mpq_class> cache{mpq_class(0), mpq_class(1, 2)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= t) {
    const int k = static_cast<int>(cache.size());
    const mpq_class& prev = cache.back();
    mpq_class step = (mpq_class(2 * k - 3) + 2 * prev) / mpq_class(binomial(1L << k, 1L << (k - 1)));
    mpq_class next = prev - step;
    next.canonicalize();
    cache.push_back(std::move(next));
  }
  return cache[t];
}

double xi(int t) { return round_to_double(xi_exact(std::min(t, kXiExactMax))); }

double psi(int n, int d, double c) {
  if (d < 1 || d >= n) throw DomainError("psi requires 1 <= d < n");
  return (std::log2(static_cast<double>(n - d)) + c) * (1.0 - inv_binomial(n, d));
}

double psi_step(int n, int d, double c) {
  if (d < 1 || d + 1 >= n) throw DomainError("psi_step requires 1 <= d < n-1");
  const double inv = inv_binomial(n, d);
  const double m = static_cast<double>(n - d - 1);
  return std::log2(1.0 + 1.0 / m) * (1.0 - inv) -
         (std::log2(m) + c) * inv * (1.0 - static_cast<double>(d + 1) / (n - d));
}

double psi_by_steps(int n, int d, double c) {
  double v = psi(n, 1, c);
  for (int j = 1; j < d; ++j) v -= psi_step(n, j, c);
  return v;
}

double psi_low_end_gap(int n, double c) {
  if (n < 2) throw DomainError("psi_low_end_gap requires n >= 2");
  return std::log2(2.0 - 2.0 / n) - (std::log2(static_cast<double>(n - 1)) + c) / n;
}

double psi_mid_end_gap(int n, double c) {
  if (n < 3) throw DomainError("psi_mid_end_gap requires n >= 3");
  const int delta = n % 2 == 0 ? 2 : 1;
  return std::log2(1.0 + static_cast<double>(delta) / n) -
         (std::log2((n + delta) / 2.0) + c) * inv_binomial(n, (n - delta) / 2);
}

double tail(int k) {
  if (k < 0) throw DomainError("tail requires k >= 0");
  double sum = 0.0;
  for (int z = k;; ++z) {
    const double term = log2_one_plus_pow2(z);
    if (term < 1e-18) break;
    sum += term;
  }
  return sum;
}

double d_max(const dp::ComplexityTable& table, int k) {
  if (k < 1 || k > 30) throw DomainError("d_max requires 1 <= k <= 30");
  const int top = 1 << k;
  if (!table.covers(top))
    throw TableIncompleteError("d_max(k=" + std::to_string(k) + ") needs a table up to n=" + std::to_string(top));
  double best = -std::numeric_limits<double>::infinity();
  for (int n = 2; n <= top; ++n) {
    const double lg = std::log2(static_cast<double>(n));
    for (int d = 1; d < n; ++d) best = std::max(best, table.value(n, d) - lg);
  }
  return best;
}

BoundsReport report(int n, const dp::ComplexityTable& table) {
  if (!table.covers(n)) throw TableIncompleteError("report: table does not cover n=" + std::to_string(n));
  constexpr double tol = 1e-9;
  BoundsReport r;
  r.n = n;
  r.log2n = std::log2(static_cast<double>(n));
  r.phi = phi(n);
  r.phi_upper = r.log2n + r.phi;
  r.refined_upper = r.log2n + kRefinedUpper;
  r.xi_floor = n >= 2 ? xi(floor_log2(n)) : 0.0;
  r.xi_lower = r.log2n + r.xi_floor;
  r.practical_lower = r.log2n + kPracticalLower;
  r.prior_upper = ceil_log2(n) + 2.0;
  r.bbc_lower = r.log2n + kBbcLower;
  r.bbc_upper = r.log2n + kBbcUpper;
  r.bbc = dp::bbc(n, table);

  r.e_min = std::numeric_limits<double>::quiet_NaN();
  r.e_max = std::numeric_limits<double>::quiet_NaN();
  for (int d = 1; d < n; ++d) {
    const double e = table.value(n, d);
    r.e_min = d == 1 ? e : std::min(r.e_min, e);
    r.e_max = d == 1 ? e : std::max(r.e_max, e);
  }
  if (n >= 2) {
    r.holds_phi_upper = r.e_max <= r.phi_upper + tol;
    r.holds_refined_upper = r.e_max <= r.refined_upper + tol;
    r.holds_xi_lower = r.e_min >= r.xi_lower - tol;
    r.holds_practical_lower = r.e_min >= r.practical_lower - tol;
  }
  r.holds_bbc_upper = r.bbc <= r.bbc_upper + tol;
  r.holds_prior_upper = r.bbc <= r.prior_upper + tol;
  return r;
}

namespace {

const char* verdict(bool ok) { return ok ? "holds" : "VIOLATED"; }

}  // namespace

void print_report(const BoundsReport& r, std::ostream& out) {
  char buf[160];
  auto line = [&](const char* name, double v, const char* note = "") {
    if (*note)
      std::snprintf(buf, sizeof buf, "  %-34s %18.12g  %s\n", name, v, note);
    else
      std::snprintf(buf, sizeof buf, "  %-34s %18.12g\n", name, v);
    out << buf;
  };
  out << "bounds at n = " << r.n << '\n';
  line("log2 n", r.log2n);
  line("phi(n)", r.phi);
  line("min_d E(n,d)", r.e_min);
  line("max_d E(n,d)", r.e_max);
  line("log2 n + phi(n)", r.phi_upper, verdict(r.holds_phi_upper));
  line("log2 n + 1.42141558", r.refined_upper, verdict(r.holds_refined_upper));
  line("xi(floor(log2 n))", r.xi_floor);
  line("log2 n + xi(floor(log2 n))", r.xi_lower, verdict(r.holds_xi_lower));
  line("log2 n + 1/6", r.practical_lower, verdict(r.holds_practical_lower));
  line("BBC(n)", r.bbc);
  line("log2 n + 1.1186406", r.bbc_lower, "(no o(1) term)");
  line("log2 n + 2.42141558", r.bbc_upper, verdict(r.holds_bbc_upper));
  line("ceil(log2 n) + 2", r.prior_upper, verdict(r.holds_prior_upper));
}

void print_report_kv(const BoundsReport& r, std::ostream& out) {
  char buf[96];
  auto kv = [&](const char* key, double v) {
    std::snprintf(buf, sizeof buf, "%s=%.12g\n", key, v);
    out << buf;
  };
  auto kb = [&](const char* key, bool v) { out << key << '=' << (v ? "true" : "false") << '\n'; };
  out << "n=" << r.n << '\n';
  kv("phi", r.phi);
  kv("phi_upper", r.phi_upper);
  kv("refined_upper", r.refined_upper);
  kv("xi_floor", r.xi_floor);
  kv("xi_lower", r.xi_lower);
  kv("practical_lower", r.practical_lower);
  kv("prior_upper", r.prior_upper);
  kv("bbc_lower", r.bbc_lower);
  kv("bbc_upper", r.bbc_upper);
  kv("bbc", r.bbc);
  kv("e_min", r.e_min);
  kv("e_max", r.e_max);
  kb("holds_phi_upper", r.holds_phi_upper);
  kb("holds_refined_upper", r.holds_refined_upper);
  kb("holds_xi_lower", r.holds_xi_lower);
  kb("holds_practical_lower", r.holds_practical_lower);
  kb("holds_bbc_upper", r.holds_bbc_upper);
  kb("holds_prior_upper", r.holds_prior_upper);
}

}  // namespace binval::bounds
