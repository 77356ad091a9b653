#include "binval/table_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "binval/errors.hpp"

namespace binval::dp {

namespace {

std::string hex_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

}  // namespace

void save_table(const ComplexityTable& table, std::ostream& out) {
  const int rows = table.complete_rows();
  out << "binval-etable v1 " << to_string(table.mode()) << ' ' << rows << '\n';
  for (int n = 1; n <= rows; ++n) {
    for (int d = 0; d <= n; ++d) {
      out << n << ' ' << d << ' ';
      if (table.mode() == Mode::exact) {
        const mpq_class& q = table.exact(n, d);
        out << q.get_num().get_str() << '/' << q.get_den().get_str();
      } else {
        out << hex_double(table.value(n, d));
      }
      if (d != 0 && d != n) out << ' ' << table.split(n, d);
      out << '\n';
    }
  }
}

void save_table(const ComplexityTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  save_table(table, out);
  if (!out) throw Error("write to " + path.string() + " failed");
}

namespace {

long parse_int(const std::string& token, std::size_t line, const char* what) {
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(token.c_str(), &end, 10);
  if (token.empty() || *end != '\0' || errno != 0)
    throw ParseError(line, std::string("bad ") + what + " '" + token + "'");
  return v;
}

mpq_class parse_rational(const std::string& token, std::size_t line) {
  const auto slash = token.find('/');
  if (slash == std::string::npos) throw ParseError(line, "expected num/den, got '" + token + "'");
  mpz_class num, den;
  if (num.set_str(token.substr(0, slash), 10) != 0 || den.set_str(token.substr(slash + 1), 10) != 0)
    throw ParseError(line, "bad rational '" + token + "'");
  if (den <= 0) throw ParseError(line, "non-positive denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

double parse_double(const std::string& token, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || *end != '\0') throw ParseError(line, "bad float '" + token + "'");
  return v;
}

}  // namespace

ComplexityTable load_table(std::istream& in) {
  std::string text;
  std::size_t line_no = 1;
  if (!std::getline(in, text)) throw ParseError(line_no, "missing header");
  std::istringstream header(text);
  std::string magic, version, mode_text, n_text, extra;
  header >> magic >> version >> mode_text >> n_text;
  if (magic != "binval-etable" || version != "v1") throw ParseError(line_no, "not a binval-etable v1 file");
  Mode mode;
  try {
    mode = parse_mode(mode_text);
  } catch (const DomainError&) {
    throw ParseError(line_no, "unknown mode '" + mode_text + "'");
  }
  const long n_max = parse_int(n_text, line_no, "n_max");
  if (n_max < 1 || (mode == Mode::f64 && n_max > kFloatHardCap)) throw ParseError(line_no, "n_max out of range");
  if (header >> extra) throw ParseError(line_no, "trailing header fields");

  ComplexityTable table(static_cast<int>(n_max), mode);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<double> approx(n + 1);
    std::vector<mpq_class> exact(mode == Mode::exact ? n + 1 : 0);
    std::vector<int> splits(n + 1, 0);
    for (int d = 0; d <= n; ++d) {
      ++line_no;
      if (!std::getline(in, text))
        throw ParseError(line_no, "unexpected end of file, expected row n=" + std::to_string(n) +
                                      " d=" + std::to_string(d));
      std::istringstream row(text);
      std::vector<std::string> fields;
      for (std::string f; row >> f;) fields.push_back(f);
      const bool extreme = d == 0 || d == n;
      if (fields.size() != (extreme ? 3u : 4u))
        throw ParseError(line_no, "expected " + std::to_string(extreme ? 3 : 4) + " fields");
      if (parse_int(fields[0], line_no, "n") != n || parse_int(fields[1], line_no, "d") != d)
        throw ParseError(line_no, "rows out of order, expected n=" + std::to_string(n) +
                                      " d=" + std::to_string(d));
      if (mode == Mode::exact)
        exact[d] = parse_rational(fields[2], line_no);
      else
        approx[d] = parse_double(fields[2], line_no);
      if (!extreme) {
        const long s = parse_int(fields[3], line_no, "s_opt");
        if (s <= 0 || s >= n) throw ParseError(line_no, "s_opt outside (0, n)");
        splits[d] = static_cast<int>(s);
      }
    }
    if (mode == Mode::exact)
      table.commit_row(n, std::move(exact), std::move(splits));
    else
      table.commit_row(n, std::move(approx), std::move(splits));
  }
  ++line_no;
  while (std::getline(in, text)) {
    if (text.find_first_not_of(" \t\r") != std::string::npos) throw ParseError(line_no, "trailing data");
    ++line_no;
  }
  return table;
}

ComplexityTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return load_table(in);
}

}  // namespace binval::dp
