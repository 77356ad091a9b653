#pragma once

#include <iosfwd>

#include <gmpxx.h>

#include "binval/complexity_table.hpp"

namespace binval::bounds {

// Additive constants on top of log2 n.
inline constexpr double kRefinedUpper = 1.42141558;     // E(n,d) upper
inline constexpr double kLowerConstant = 0.1186406;     // E(n,d) lower
inline constexpr double kPracticalLower = 1.0 / 6.0;    // observed E(n,d) lower
inline constexpr double kBbcUpper = 2.42141558;
inline constexpr double kBbcLower = 1.1186406;
inline constexpr double kDmaxAtK10 = 1.4194631;
inline constexpr double kTailAtK10 = 0.00195248;
inline constexpr double kLogSeriesSum = 2.2535240379347;

// Largest C for which the psi inequalities are claimed.
inline constexpr double kPsiDecreaseMaxC = 0.88;
inline constexpr double kPsiLowEndMaxC = 0.728;
inline constexpr double kPsiMidEndMaxC = 0.57908006;

/// 1 + sum_{z=0}^{ceil(log2 n)-1} log2(1 + 2^-z).
double phi(int n);

/// Lower-bound sequence: xi(1) = 1/2,
///   xi(t) = xi(t-1) - (2t + 2 xi(t-1) - 3) / C(2^t, 2^(t-1)).
/// Exact for t <= kXiExactMax; beyond that the decrements are far below double
/// resolution and xi(t) returns xi(kXiExactMax).
inline constexpr int kXiExactMax = 22;
mpq_class xi_exact(int t);
double xi(int t);

/// (log2(n-d) + c) * (1 - 1/C(n,d)), for 1 <= d < n.
double psi(int n, int d, double c);

/// Closed form of psi(n,d,c) - psi(n,d+1,c):
///   log2(1 + 1/(n-d-1)) (1 - 1/C(n,d)) - (log2(n-d-1) + c)/C(n,d) * (1 - (d+1)/(n-d)).
double psi_step(int n, int d, double c);

/// psi(n,d,c) reached from psi(n,1,c) by subtracting psi_step for 1..d-1.
double psi_by_steps(int n, int d, double c);

/// log2(2 - 2/n) - (log2(n-1) + c)/n, equal to psi(n,1,c) - (log2(n/2) + c).
double psi_low_end_gap(int n, double c);

/// With delta = 2 for even n and 1 for odd n:
///   log2(1 + delta/n) - (log2((n+delta)/2) + c) / C(n, (n-delta)/2),
/// equal to psi(n, floor((n-1)/2), c) - (log2(n/2) + c).
double psi_mid_end_gap(int n, double c);

/// sum_{z=k}^inf log2(1 + 2^-z), stopping once a term drops below 1e-18.
double tail(int k);

/// max over 2 <= n <= 2^k and 0 < d < n of E(n,d) - log2 n.
double d_max(const dp::ComplexityTable& table, int k);

/// All bounds at one n next to the table's E(n, .) range and BBC(n).
struct BoundsReport {
  int n = 0;
  double log2n = 0;
  double phi = 0;
  double phi_upper = 0;    // log2 n + phi(n)
  double refined_upper = 0;   // log2 n + 1.42141558
  double xi_floor = 0;        // xi(floor(log2 n)); 0 for n = 1
  double xi_lower = 0;    // log2 n + xi_floor
  double practical_lower = 0; // log2 n + 1/6
  double prior_upper = 0;     // ceil(log2 n) + 2
  double bbc_lower = 0;       // log2 n + 1.1186406
  double bbc_upper = 0;       // log2 n + 2.42141558
  double bbc = 0;
  double e_min = 0;           // over 0 < d < n; NaN when n = 1
  double e_max = 0;

  bool holds_phi_upper = true;
  bool holds_refined_upper = true;
  bool holds_xi_lower = true;
  bool holds_practical_lower = true;
  bool holds_bbc_upper = true;
  bool holds_prior_upper = true;
};

/// Inequality checks use tolerance 1e-9.
BoundsReport report(int n, const dp::ComplexityTable& table);

void print_report(const BoundsReport& r, std::ostream& out);
void print_report_kv(const BoundsReport& r, std::ostream& out);

}  // namespace binval::bounds
