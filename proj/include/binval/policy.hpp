#pragma once

#include <vector>

#include <gmpxx.h>

#include "binval/complexity_table.hpp"

namespace binval::sim {

/// Exact expected number of further queries the lockstep solver spends after a
/// first query at distance d, for d = 0..n, following the table's splits.
///
/// Sibling subproblems run side by side, so a node finishes when its slower
/// child does: the remaining time is 1 + max(T_flipped, T_kept) with the two
/// children independent. This is computed on full distributions, which is why
/// it can exceed the table's E(n,d) (built from the max of the two means).
std::vector<mpq_class> policy_expectation_exact(int n, const dp::ComplexityTable& table);
std::vector<double> policy_expectation(int n, const dp::ComplexityTable& table);

/// 1 + sum_d policy_expectation(n)[d] C(n,d) / 2^n: the solver's mean total.
mpq_class policy_bbc_exact(int n, const dp::ComplexityTable& table);
double policy_bbc(int n, const dp::ComplexityTable& table);

}  // namespace binval::sim
