#include <doctest.h>

#include "binval/complexity_table.hpp"
#include "binval/errors.hpp"
#include "binval/oracle.hpp"

using namespace binval;
using namespace binval::oracle;

TEST_SUITE("oracle") {

TEST_CASE("initial values") {
  GameTreeOracle o1(1);
  CHECK(o1.instance_count() == 2);
  CHECK(o1.optimal_value(o1.initial_state()) == mpq_class(3, 2));
  GameTreeOracle o3(3);
  CHECK(o3.instance_count() == 48);
}

TEST_CASE("singleton belief costs one query") {
  GameTreeOracle o(2);
  auto state = o.initial_state();
  const auto& target = o.instance(3);
  BitString q(2);
  if (q == target.optimum()) q.flip(0);
  state = o.observe(state, q, evaluate(target, q));
  BitString q2 = q;
  q2.flip(0);
  if (q2 == target.optimum()) q2.flip(1);
  state = o.observe(state, q2, evaluate(target, q2));
  if (state.size() == 1) CHECK(o.optimal_value(state) == 1);
  CHECK_THROWS_AS(o.observe(state, q, MatchMask(2)), DomainError);
}

TEST_CASE("agrees with the DP for n <= 3") {
  const auto t = dp::compute_table(3, dp::Mode::exact);
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= n; ++d) CHECK(conditional_e(n, d) == t.exact(n, d));
  CHECK(conditional_e(2, 1) == mpq_class(3, 2));
  CHECK(conditional_e(3, 1) == 2);
}

TEST_CASE("memoization and canonical form do not change values") {
  OracleOptions plain;
  plain.memoize = false;
  plain.canonicalize = false;
  for (int n = 1; n <= 2; ++n)
    for (int d = 0; d <= n; ++d) CHECK(conditional_e(n, d, plain) == conditional_e(n, d));
  OracleOptions no_canon;
  no_canon.canonicalize = false;
  for (int d = 0; d <= 3; ++d) CHECK(conditional_e(3, d, no_canon) == conditional_e(3, d));
}

TEST_CASE("n = 4 beats the unbiased recursion at d = 2") {
  OracleOptions large;
  large.max_n = 4;
  const auto t = dp::compute_table(4, dp::Mode::exact);
  CHECK(conditional_e(4, 1, large) == t.exact(4, 1));
  CHECK(conditional_e(4, 2, large) == mpq_class(7, 3));
  CHECK(conditional_e(4, 2, large) > t.exact(4, 2));
  CHECK(conditional_e(4, 4, large) == 1);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(conditional_e(4, 1), ResourceError);
  OracleOptions too_big;
  too_big.max_n = 5;
  CHECK_THROWS_AS(conditional_e(5, 1, too_big), ResourceError);
}

}
