#include <doctest.h>

#include <cmath>

#include "binval/binomial.hpp"
#include "binval/complexity_table.hpp"
#include "binval/errors.hpp"

using namespace binval;
using namespace binval::dp;

TEST_SUITE("complexity") {

TEST_CASE("binomials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial_f64(64, 32) == doctest::Approx(1.832624140942590534e18));
  CHECK(binomial_f64(1024, 0) == 1.0);
}

TEST_CASE("small exact values") {
  const auto t = compute_table(8, Mode::exact);
  CHECK(t.exact(1, 0) == 0);
  CHECK(t.exact(1, 1) == 1);
  CHECK(t.exact(2, 1) == mpq_class(3, 2));
  CHECK(t.exact(3, 1) == 2);
  CHECK(t.exact(3, 2) == 2);
  CHECK(t.exact(4, 1) == mpq_class(5, 2));
  CHECK(t.exact(4, 2) == mpq_class(13, 6));
  CHECK(t.exact(4, 3) == mpq_class(5, 2));
  CHECK(e_of_split<mpq_class>(t, 3, 1, 1) == 1);
  CHECK(e_of_split<mpq_class>(t, 3, 1, 2) == mpq_class(4, 3));
  CHECK(optimal_split(2, 1, t) == 1);
  CHECK(optimal_split(3, 1, t) == 1);
  CHECK(split_weight(4, 2, 2, 1).value() == mpq_class(2, 3));
  CHECK(bbc_exact(1, t) == mpq_class(3, 2));
  CHECK(bbc_exact(2, t) == 2);
  CHECK(bbc_exact(3, t) == mpq_class(21, 8));
  CHECK(bbc_exact(4, t) == mpq_class(25, 8));
  CHECK(bbc_exact(8, t) == mpq_class(561, 128));
}

TEST_CASE("exact BBC(16)") {
  const auto t = compute_table(16, Mode::exact);
  CHECK(bbc_exact(16, t) == mpq_class(178825, 32768));
  CHECK(bbc(16, t) == 5.457305908203125);
}

TEST_CASE("float BBC at larger n") {
  const auto t = compute_table(64, Mode::f64);
  CHECK(bbc(32, t) == doctest::Approx(6.48077).epsilon(1e-5));
  CHECK(bbc(64, t) == doctest::Approx(7.49088).epsilon(1e-5));
}

TEST_CASE("exact and float tables agree") {
  const auto e = compute_table(20, Mode::exact);
  const auto f = compute_table(20, Mode::f64);
  for (int n = 1; n <= 20; ++n)
    for (int d = 0; d <= n; ++d) {
      CHECK(std::abs(e.value(n, d) - f.value(n, d)) < 1e-10);
      CHECK(e.split(n, d) == f.split(n, d));
    }
}

TEST_CASE("symmetries and split weights") {
  const auto t = compute_table(12, Mode::exact);
  for (int n = 2; n <= 12; ++n)
    for (int d = 1; d < n; ++d) {
      CHECK(t.exact(n, d) == t.exact(n, n - d));
      for (int s = 1; s < n; ++s) {
        CHECK(e_of_split<mpq_class>(t, n, d, s) == e_of_split<mpq_class>(t, n, n - d, n - s));
        mpq_class total = 0;
        double total_f = 0;
        for (int u = std::max(0, s + d - n); u <= std::min(s, d); ++u) {
          total += split_weight(n, d, s, u).value();
          total_f += split_weight_f64(n, d, s, u);
        }
        CHECK(total == 1);
        CHECK(total_f == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(t.exact(n, d) <= 1 + e_of_split<mpq_class>(t, n, d, s));
      }
      CHECK(t.exact(n, d) == 1 + e_of_split<mpq_class>(t, n, d, optimal_split(n, d, t)));
    }
}

TEST_CASE("the mirrored split is not a symmetry") {
  // E(n,d,s) = E(n,d,n-s) fails already at n = 3.
  const auto t = compute_table(3, Mode::exact);
  CHECK(e_of_split<mpq_class>(t, 3, 1, 1) != e_of_split<mpq_class>(t, 3, 1, 2));
}

TEST_CASE("minimum of E - log2 n is 1/6 at n = 4") {
  const auto t = compute_table(64, Mode::f64);
  double best = 1e9;
  int arg = 0;
  for (int n = 2; n <= 64; ++n)
    for (int d = 1; d < n; ++d) {
      const double gap = t.value(n, d) - std::log2(n);
      if (gap < best) {
        best = gap;
        arg = n;
      }
    }
  CHECK(arg == 4);
  CHECK(best == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("threaded construction is identical") {
  TableOptions opts;
  opts.threads = 4;
  CHECK(compute_table(40, Mode::f64, opts) == compute_table(40, Mode::f64));
  CHECK(compute_table(14, Mode::exact, opts) == compute_table(14, Mode::exact));
}

TEST_CASE("errors") {
  const auto t = compute_table(4, Mode::f64);
  CHECK_THROWS_AS(t.exact(2, 1), DomainError);
  CHECK_THROWS_AS(t.value(5, 1), TableIncompleteError);
  CHECK_THROWS_AS(optimal_split(4, 0, t), DomainError);
  CHECK_THROWS_AS(compute_table(30, Mode::exact), ResourceError);
  CHECK_THROWS_AS(compute_table(kFloatHardCap + 1, Mode::f64), ResourceError);
  CHECK(parse_mode("exact") == Mode::exact);
  CHECK(to_string(Mode::f64) == "f64");
  CHECK_THROWS(parse_mode("double"));
}

}
