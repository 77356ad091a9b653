#include "binval/complexity_table.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>

#include "binval/binomial.hpp"
#include "binval/errors.hpp"

namespace binval::dp {

std::string to_string(Mode mode) { return mode == Mode::exact ? "exact" : "f64"; }

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::exact;
  if (text == "f64") return Mode::f64;
  throw DomainError("unknown table mode '" + text + "'");
}

ComplexityTable::ComplexityTable(int n_max, Mode mode) : mode_(mode), n_max_(n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  const std::size_t cells = index(n_max + 1, 0);
  approx_.assign(cells, 0.0);
  split_.assign(cells, 0);
  if (mode == Mode::exact) exact_.assign(cells, mpq_class(0));
}

void ComplexityTable::check_cell(int n, int d) const {
  if (n < 1 || d < 0 || d > n)
    throw DomainError("table cell (" + std::to_string(n) + "," + std::to_string(d) + ") out of range");
  if (n > complete_rows_)
    throw TableIncompleteError("table row " + std::to_string(n) + " not computed");
}

double ComplexityTable::value(int n, int d) const {
  check_cell(n, d);
  return approx_[index(n, d)];
}

const mpq_class& ComplexityTable::exact(int n, int d) const {
  if (mode_ != Mode::exact) throw DomainError("exact value requested from an f64 table");
  check_cell(n, d);
  return exact_[index(n, d)];
}

int ComplexityTable::split(int n, int d) const {
  check_cell(n, d);
  return split_[index(n, d)];
}

void ComplexityTable::check_row(int n, std::size_t values, std::size_t splits) const {
  if (n != complete_rows_ + 1) throw DomainError("rows must be committed in order");
  if (n > n_max_) throw DomainError("row beyond n_max");
  if (values != static_cast<std::size_t>(n) + 1 || splits != values)
    throw SizeError("row must hold n+1 entries");
}

void ComplexityTable::commit_row(int n, std::vector<double> values, std::vector<int> splits) {
  if (mode_ != Mode::f64) throw DomainError("f64 row committed to an exact table");
  check_row(n, values.size(), splits.size());
  for (int d = 0; d <= n; ++d) {
    approx_[index(n, d)] = values[d];
    split_[index(n, d)] = splits[d];
  }
  complete_rows_ = n;
}

void ComplexityTable::commit_row(int n, std::vector<mpq_class> values, std::vector<int> splits) {
  if (mode_ != Mode::exact) throw DomainError("exact row committed to an f64 table");
  check_row(n, values.size(), splits.size());
  for (int d = 0; d <= n; ++d) {
    values[d].canonicalize();
    approx_[index(n, d)] = values[d].get_d();
    exact_[index(n, d)] = std::move(values[d]);
    split_[index(n, d)] = splits[d];
  }
  complete_rows_ = n;
}

bool operator==(const ComplexityTable& a, const ComplexityTable& b) {
  if (a.mode_ != b.mode_ || a.n_max_ != b.n_max_ || a.complete_rows_ != b.complete_rows_) return false;
  const std::size_t used = ComplexityTable::index(a.complete_rows_ + 1, 0);
  for (std::size_t i = 0; i < used; ++i) {
    if (a.split_[i] != b.split_[i]) return false;
    if (a.mode_ == Mode::exact) {
      if (a.exact_[i] != b.exact_[i]) return false;
    } else if (std::bit_cast<std::uint64_t>(a.approx_[i]) != std::bit_cast<std::uint64_t>(b.approx_[i])) {
      return false;
    }
  }
  return true;
}

mpq_class SplitWeight::value() const {
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return q;
}

namespace {

void check_split_args(int n, int d, int s) {
  if (n < 1 || d < 0 || d > n) throw DomainError("split requires 0 <= d <= n");
  if (s <= 0 || s >= n) throw DomainError("split requires 0 < s < n");
}

void check_t(int n, int d, int s, int t) {
  if (t < std::max(0, s + d - n) || t > std::min(s, d))
    throw DomainError("t outside [max(0,s+d-n), min(s,d)]");
}

}  // namespace

SplitWeight split_weight(int n, int d, int s, int t) {
  check_split_args(n, d, s);
  check_t(n, d, s, t);
  SplitWeight w{binomial(s, t) * binomial(n - s, d - t), binomial(n, d)};
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), w.numerator.get_mpz_t(), w.denominator.get_mpz_t());
  w.numerator /= g;
  w.denominator /= g;
  return w;
}

double split_weight_f64(int n, int d, int s, int t) {
  check_split_args(n, d, s);
  check_t(n, d, s, t);
  return binomial_f64(s, t) * binomial_f64(n - s, d - t) / binomial_f64(n, d);
}

namespace {

void check_prerequisites(const ComplexityTable& table, int n, int d, int s) {
  check_split_args(n, d, s);
  if (d == 0 || d == n) throw DomainError("e_of_split requires 0 < d < n");
  if (table.complete_rows() < n - 1)
    throw TableIncompleteError("e_of_split(" + std::to_string(n) + ",...) needs rows below " +
                               std::to_string(n));
}

}  // namespace

template <>
double e_of_split<double>(const ComplexityTable& table, int n, int d, int s) {
  check_prerequisites(table, n, d, s);
  const double total = binomial_f64(n, d);
  double acc = 0.0;
  for (int t = std::max(0, s + d - n); t <= std::min(s, d); ++t) {
    const double worse = std::max(table.value(s, s - t), table.value(n - s, d - t));
    acc += worse * (binomial_f64(s, t) * binomial_f64(n - s, d - t) / total);
  }
  return acc;
}

template <>
mpq_class e_of_split<mpq_class>(const ComplexityTable& table, int n, int d, int s) {
  check_prerequisites(table, n, d, s);
  // Accumulate over the common denominator C(n,d), divide once at the end.
  mpq_class acc = 0;
  for (int t = std::max(0, s + d - n); t <= std::min(s, d); ++t) {
    const mpq_class& a = table.exact(s, s - t);
    const mpq_class& b = table.exact(n - s, d - t);
    acc += (a < b ? b : a) * mpq_class(binomial(s, t) * binomial(n - s, d - t));
  }
  acc /= mpq_class(binomial(n, d));
  return acc;
}

namespace {

template <class T>
bool strictly_better(const T& candidate, const T& best);

template <>
bool strictly_better<double>(const double& candidate, const double& best) {
  return candidate < best - kTieTolerance;
}

template <>
bool strictly_better<mpq_class>(const mpq_class& candidate, const mpq_class& best) {
  return candidate < best;
}

template <class T>
void fill_cell(const ComplexityTable& table, int n, int d, std::vector<T>& values,
               std::vector<int>& splits) {
  int best_s = 1;
  T best = e_of_split<T>(table, n, d, 1);
  for (int s = 2; s < n; ++s) {
    T v = e_of_split<T>(table, n, d, s);
    if (strictly_better(v, best)) {
      best = std::move(v);
      best_s = s;
    }
  }
  values[d] = best + 1;
  splits[d] = best_s;
}

template <class T>
void build_rows(ComplexityTable& table, int n_max, unsigned threads) {
  for (int n = 1; n <= n_max; ++n) {
    std::vector<T> values(n + 1, T(0));
    std::vector<int> splits(n + 1, 0);
    values[n] = T(1);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, n > 2 ? n - 1 : 1));
    if (workers == 1) {
      for (int d = 1; d < n; ++d) fill_cell(table, n, d, values, splits);
    } else {
      // Cells of one row only read earlier rows; each d is written by exactly one worker.
      std::atomic<int> next{1};
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (int d = next++; d < n; d = next++) fill_cell(table, n, d, values, splits);
        });
      }
      for (auto& th : pool) th.join();
    }
    table.commit_row(n, std::move(values), std::move(splits));
  }
}

}  // namespace

ComplexityTable compute_table(int n_max, Mode mode, const TableOptions& options) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  const int cap = mode == Mode::exact ? options.exact_cap : std::min(options.float_cap, kFloatHardCap);
  if (n_max > cap)
    throw ResourceError("n_max " + std::to_string(n_max) + " exceeds the " + to_string(mode) +
                        " cap of " + std::to_string(cap));
  ComplexityTable table(n_max, mode);
  if (mode == Mode::exact)
    build_rows<mpq_class>(table, n_max, options.threads);
  else
    build_rows<double>(table, n_max, options.threads);
  return table;
}

mpq_class bbc_exact(int n, const ComplexityTable& table) {
  if (!table.covers(n)) throw TableIncompleteError("bbc: table does not cover n=" + std::to_string(n));
  mpq_class acc = 0;
  for (int d = 0; d <= n; ++d) acc += table.exact(n, d) * mpq_class(binomial(n, d));
  mpz_class pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n));
  acc /= mpq_class(pow2);
  acc += 1;
  return acc;
}

double bbc(int n, const ComplexityTable& table) {
  if (!table.covers(n)) throw TableIncompleteError("bbc: table does not cover n=" + std::to_string(n));
  if (table.mode() == Mode::exact) return bbc_exact(n, table).get_d();
  // C(n,d)/2^n computed exactly in the exponent to stay finite for large n.
  double acc = 0.0;
  for (int d = 0; d <= n; ++d) acc += table.value(n, d) * std::ldexp(binomial_f64(n, d), -n);
  return 1.0 + acc;
}

int optimal_split(int n, int d, const ComplexityTable& table) {
  if (!table.covers(n)) throw TableIncompleteError("optimal_split: table does not cover n=" + std::to_string(n));
  if (d <= 0 || d >= n) throw DomainError("optimal_split requires 0 < d < n");
  return table.split(n, d);
}

}  // namespace binval::dp
