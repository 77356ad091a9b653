#include "binval/policy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binval/binomial.hpp"
#include "binval/errors.hpp"

namespace binval::sim {

namespace {

template <class T>
T weight(int n, int d, int s, int t);

template <>
mpq_class weight<mpq_class>(int n, int d, int s, int t) {
  return dp::split_weight(n, d, s, t).value();
}

template <>
double weight<double>(int n, int d, int s, int t) {
  return dp::split_weight_f64(n, d, s, t);
}

/// cdf[m][k][j] = P(T(m,k) <= j) for j = 0..n; T(m,k) never exceeds m.
template <class T>
std::vector<T> expectations(int n, const dp::ComplexityTable& table) {
  if (n < 1) throw DomainError("policy expectation requires n >= 1");
  if (!table.covers(n)) throw TableIncompleteError("policy: table does not cover n=" + std::to_string(n));
  const int horizon = n + 1;
  std::vector<std::vector<std::vector<T>>> cdf(n + 1);
  for (int m = 1; m <= n; ++m) {
    cdf[m].resize(m + 1);
    cdf[m][0].assign(horizon, T(1));
    cdf[m][m].assign(horizon, T(1));
    cdf[m][m][0] = T(0);
    for (int k = 1; k < m; ++k) {
      const int s = table.split(m, k);
      std::vector<T> f(horizon, T(0));
      for (int t = std::max(0, s + k - m); t <= std::min(s, k); ++t) {
        const T p = weight<T>(m, k, s, t);
        const auto& a = cdf[s][s - t];
        const auto& b = cdf[m - s][k - t];
        for (int j = 1; j < horizon; ++j) f[j] += p * a[j - 1] * b[j - 1];
      }
      cdf[m][k] = std::move(f);
    }
  }
  std::vector<T> out(n + 1, T(0));
  for (int d = 0; d <= n; ++d) {
    T e(0);
    for (int j = 0; j < horizon; ++j) e += T(1) - cdf[n][d][j];
    out[d] = e;
  }
  return out;
}

}  // namespace

std::vector<mpq_class> policy_expectation_exact(int n, const dp::ComplexityTable& table) {
  auto out = expectations<mpq_class>(n, table);
  for (auto& q : out) q.canonicalize();
  return out;
}

std::vector<double> policy_expectation(int n, const dp::ComplexityTable& table) {
  return expectations<double>(n, table);
}

mpq_class policy_bbc_exact(int n, const dp::ComplexityTable& table) {
  const auto e = policy_expectation_exact(n, table);
  mpq_class acc = 0;
  for (int d = 0; d <= n; ++d) acc += e[d] * mpq_class(binomial(n, d));
  mpz_class pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n));
  acc /= mpq_class(pow2);
  return acc + 1;
}

double policy_bbc(int n, const dp::ComplexityTable& table) {
  const auto e = policy_expectation(n, table);
  double acc = 0.0;
  for (int d = 0; d <= n; ++d) acc += e[d] * std::ldexp(binomial_f64(n, d), -n);
  return 1.0 + acc;
}

}  // namespace binval::sim
