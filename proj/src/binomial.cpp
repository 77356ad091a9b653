#include "binval/binomial.hpp"

#include <vector>

#include "binval/errors.hpp"

namespace binval {

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

std::vector<std::vector<double>> build_pascal() {
  std::vector<std::vector<double>> rows(kMaxFloatBinomialN + 1);
  rows[0] = {1.0};
  for (int n = 1; n <= kMaxFloatBinomialN; ++n) {
    rows[n].assign(n + 1, 1.0);
    for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

}  // namespace

double binomial_f64(int n, int k) {
  static const std::vector<std::vector<double>> pascal = build_pascal();
  if (n > kMaxFloatBinomialN) throw ResourceError("binomial_f64: n above float cap");
  if (n < 0 || k < 0 || k > n) return 0.0;
  return pascal[n][k];
}

}  // namespace binval
