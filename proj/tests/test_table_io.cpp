#include <doctest.h>

#include <sstream>

#include "binval/complexity_table.hpp"
#include "binval/errors.hpp"
#include "binval/table_io.hpp"

using namespace binval;
using namespace binval::dp;

namespace {

ComplexityTable round_trip(const ComplexityTable& t) {
  std::stringstream buf;
  save_table(t, buf);
  return load_table(buf);
}

int error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    load_table(in);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST_SUITE("table_io") {

TEST_CASE("exact and f64 tables round trip bit for bit") {
  const auto e = compute_table(12, Mode::exact);
  const auto f = compute_table(40, Mode::f64);
  CHECK(round_trip(e) == e);
  CHECK(round_trip(f) == f);
}

TEST_CASE("file layout") {
  std::stringstream buf;
  save_table(compute_table(2, Mode::exact), buf);
  std::string header, line;
  std::getline(buf, header);
  CHECK(header == "binval-etable v1 exact 2");
  std::getline(buf, line);
  CHECK(line == "1 0 0/1");
  std::getline(buf, line);
  CHECK(line == "1 1 1/1");
  std::getline(buf, line);
  CHECK(line == "2 0 0/1");
  std::getline(buf, line);
  CHECK(line == "2 1 3/2 1");
}

TEST_CASE("malformed input reports the offending line") {
  const std::string good = "binval-etable v1 exact 2\n1 0 0/1\n1 1 1/1\n2 0 0/1\n";
  CHECK(error_line("") == 1);
  CHECK(error_line("binval-etable v2 exact 1\n") == 1);
  CHECK(error_line("binval-etable v1 exact 1\n1 0 0/1\n") == 3);
  CHECK(error_line("binval-etable v1 exact 1\n1 1 1/1\n1 0 0/1\n") == 2);
  CHECK(error_line("binval-etable v1 exact 1\n1 0 0\n1 1 1/1\n") == 2);
  CHECK(error_line(good + "2 1 3/2 5\n2 2 1/1\n") == 5);
  CHECK(error_line(good + "2 1 3/2\n2 2 1/1\n") == 5);
  CHECK(error_line(good + "2 1 3/0 1\n2 2 1/1\n") == 5);
  CHECK(error_line("binval-etable v1 exact 1\n1 0 0/1\n1 1 1/1\nextra\n") == 4);
  std::istringstream ok(good + "2 1 3/2 1\n2 2 1/1\n");
  CHECK(load_table(ok).exact(2, 1) == mpq_class(3, 2));
}

}
