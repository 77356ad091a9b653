#include <doctest.h>

#include <cmath>
#include <sstream>

#include "binval/complexity_table.hpp"
#include "binval/errors.hpp"
#include "binval/plot.hpp"

using namespace binval;
using namespace binval::cli;

TEST_SUITE("plot") {

TEST_CASE("rows and header") {
  const auto t = dp::compute_table(64, dp::Mode::f64);
  std::vector<int> ns;
  for (int n = 2; n <= 64; ++n) ns.push_back(n);
  const auto rows = plot_rows(ns, t);
  REQUIRE(rows.size() == 63);
  CHECK(rows[0].bbc == 2.0);
  CHECK(rows[0].ceil == 3.0);
  for (const auto& r : rows) CHECK(r.lower < r.upper);

  std::stringstream buf;
  write_plot(rows, buf);
  std::string header;
  std::getline(std::stringstream(buf.str()), header);
  CHECK(header == "n bbc lower upper ceil");
  const auto back = read_plot(buf);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].n == rows[i].n);
    CHECK(std::abs(back[i].bbc - rows[i].bbc) <= 1e-11 * rows[i].bbc);
    CHECK(std::abs(back[i].upper - rows[i].upper) <= 1e-11 * rows[i].upper);
  }
}

TEST_CASE("empty input writes only the header") {
  const auto t = dp::compute_table(2, dp::Mode::f64);
  std::ostringstream out;
  emit_plot({}, t, out);
  CHECK(out.str() == "n bbc lower upper ceil\n");
}

TEST_CASE("coverage gaps and parse errors") {
  const auto t = dp::compute_table(8, dp::Mode::f64);
  try {
    plot_rows({4, 9, 10}, t);
    FAIL("expected TableIncompleteError");
  } catch (const TableIncompleteError& e) {
    CHECK(std::string(e.what()).find("9") != std::string::npos);
    CHECK(std::string(e.what()).find("10") != std::string::npos);
  }
  std::istringstream bad("n bbc lower upper ceil\n2 2.0 x 3 3\n");
  CHECK_THROWS_AS(read_plot(bad), ParseError);
}

}
