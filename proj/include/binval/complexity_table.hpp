#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace binval::dp {

enum class Mode { exact, f64 };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// Two float-mode split values closer than this count as a tie.
inline constexpr double kTieTolerance = 1e-12;

/// Hard upper limit for float tables (double binomials overflow past it).
inline constexpr int kFloatHardCap = 1024;

struct TableOptions {
  int exact_cap = 24;
  int float_cap = 128;
  unsigned threads = 1;
};

/// Triangular table of E(n, d), the optimal expected number of further queries
/// after a first query at distance d on a size-n instance, together with the
/// minimizing split s*(n, d) for 0 < d < n.
///
/// Rows are filled in order of increasing n; complete_rows() tells how far.
/// In exact mode every entry is kept as a rational and as its double value.
class ComplexityTable {
 public:
  ComplexityTable(int n_max, Mode mode);

  Mode mode() const noexcept { return mode_; }
  int n_max() const noexcept { return n_max_; }
  int complete_rows() const noexcept { return complete_rows_; }
  bool covers(int n) const noexcept { return n >= 1 && n <= complete_rows_; }

  double value(int n, int d) const;
  /// Exact mode only.
  const mpq_class& exact(int n, int d) const;
  /// s*(n, d) for 0 < d < n; 0 at the extremes.
  int split(int n, int d) const;

  template <class T>
  T get(int n, int d) const;

  /// Stores a whole row n (d = 0..n). Rows must be added in order.
  void commit_row(int n, std::vector<double> values, std::vector<int> splits);
  void commit_row(int n, std::vector<mpq_class> values, std::vector<int> splits);

  friend bool operator==(const ComplexityTable& a, const ComplexityTable& b);

 private:
  static std::size_t index(int n, int d) {
    return static_cast<std::size_t>(n) * (n + 1) / 2 + d;
  }
  void check_cell(int n, int d) const;
  void check_row(int n, std::size_t values, std::size_t splits) const;

  Mode mode_;
  int n_max_;
  int complete_rows_ = 0;
  std::vector<double> approx_;
  std::vector<mpq_class> exact_;
  std::vector<std::int32_t> split_;
};

template <>
inline double ComplexityTable::get<double>(int n, int d) const {
  return value(n, d);
}
template <>
inline mpq_class ComplexityTable::get<mpq_class>(int n, int d) const {
  return exact(n, d);
}

/// C(s,t) C(n-s,d-t) / C(n,d): probability that exactly t of the d wrong bits
/// fall into a uniformly chosen s-subset of the n positions.
struct SplitWeight {
  mpz_class numerator;
  mpz_class denominator;

  mpq_class value() const;
};

SplitWeight split_weight(int n, int d, int s, int t);
double split_weight_f64(int n, int d, int s, int t);

/// Expected further queries after flipping s bits from a position with
/// distance d, before the "+1" for the flipping query itself:
///   sum_t max(E(s, s-t), E(n-s, d-t)) * split_weight(n, d, s, t).
/// Needs every row below n. T is mpq_class (exact tables) or double.
template <class T>
T e_of_split(const ComplexityTable& table, int n, int d, int s);

ComplexityTable compute_table(int n_max, Mode mode, const TableOptions& options = {});

/// Expected total queries from scratch: 1 + sum_d E(n,d) C(n,d) / 2^n.
mpq_class bbc_exact(int n, const ComplexityTable& table);
double bbc(int n, const ComplexityTable& table);

/// Stored argmin of e_of_split; smallest s wins ties.
int optimal_split(int n, int d, const ComplexityTable& table);

}  // namespace binval::dp
