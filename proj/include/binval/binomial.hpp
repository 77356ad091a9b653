#pragma once

#include <gmpxx.h>

namespace binval {

/// Largest n for which every C(n, k) fits in a double.
inline constexpr int kMaxFloatBinomialN = 1024;

/// Exact C(n, k); zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// C(n, k) as a double from a Pascal triangle built once up to kMaxFloatBinomialN.
/// Rows are summed in a fixed order, so values are identical on every run.
double binomial_f64(int n, int k);

}  // namespace binval
