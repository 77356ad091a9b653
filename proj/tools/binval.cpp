#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "binval/bounds.hpp"
#include "binval/complexity_table.hpp"
#include "binval/errors.hpp"
#include "binval/monte_carlo.hpp"
#include "binval/oracle.hpp"
#include "binval/plot.hpp"
#include "binval/policy.hpp"
#include "binval/selftest.hpp"
#include "binval/table_io.hpp"

namespace fs = std::filesystem;
using namespace binval;

namespace {

constexpr int kAutoExactMax = 24;

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

dp::Mode resolve_mode(const std::string& mode, int n) {
  if (mode == "auto") return n <= kAutoExactMax ? dp::Mode::exact : dp::Mode::f64;
  return dp::parse_mode(mode);
}

dp::TableOptions table_options(int n_max, unsigned threads) {
  dp::TableOptions opts;
  opts.exact_cap = std::max(opts.exact_cap, n_max);
  opts.float_cap = std::max(opts.float_cap, n_max);
  opts.threads = threads;
  return opts;
}

// Loads --table if given, else reuses or fills $BINVAL_TABLE_CACHE, else computes.
dp::ComplexityTable obtain_table(int n, dp::Mode mode, const std::string& table_file, unsigned threads) {
  if (!table_file.empty()) {
    auto table = dp::load_table(fs::path(table_file));
    if (!table.covers(n))
      throw TableIncompleteError("table " + table_file + " covers n <= " +
                                 std::to_string(table.complete_rows()) + ", need " + std::to_string(n));
    return table;
  }
  std::optional<fs::path> cached;
  if (const char* dir = std::getenv("BINVAL_TABLE_CACHE"); dir && *dir) {
    cached = fs::path(dir) / ("etable-" + dp::to_string(mode) + "-" + std::to_string(n) + ".txt");
    if (fs::exists(*cached)) {
      auto table = dp::load_table(*cached);
      if (table.covers(n) && table.mode() == mode) return table;
    }
  }
  auto table = dp::compute_table(n, mode, table_options(n, threads));
  if (cached) {
    fs::create_directories(cached->parent_path());
    dp::save_table(table, *cached);
  }
  return table;
}

int cmd_table(int n_max, const std::string& mode, const std::string& out, unsigned threads) {
  const auto m = dp::parse_mode(mode);
  const auto table = dp::compute_table(n_max, m, table_options(n_max, threads));
  dp::save_table(table, fs::path(out));
  std::cout << "wrote " << out << " (" << mode << ", n_max=" << n_max << ")\n";
  return 0;
}

int cmd_bbc(int n, const std::string& mode, const std::string& table_file, unsigned threads) {
  const auto m = resolve_mode(mode, n);
  const auto table = obtain_table(n, m, table_file, threads);
  if (table.mode() == dp::Mode::exact) {
    const mpq_class value = dp::bbc_exact(n, table);
    std::cout << value.get_str() << '\n' << fmt12(value.get_d()) << '\n';
  } else {
    std::cout << fmt12(dp::bbc(n, table)) << '\n';
  }
  return 0;
}

int cmd_bounds(int n, const std::string& table_file, bool kv) {
  const auto table = obtain_table(n, resolve_mode("auto", n), table_file, 1);
  const auto r = bounds::report(n, table);
  bounds::print_report(r, std::cout);
  if (kv) bounds::print_report_kv(r, std::cout);
  return 0;
}

int cmd_simulate(int n, std::size_t runs, std::uint64_t seed, const std::string& table_file,
                 const std::string& log_dir, unsigned threads) {
  const auto table = obtain_table(n, resolve_mode("auto", n), table_file, 1);
  sim::MonteCarloOptions opts;
  opts.threads = threads;
  if (!log_dir.empty()) {
    fs::create_directories(log_dir);
    opts.log_dir = fs::path(log_dir);
  }
  const auto stats = sim::monte_carlo(n, runs, table, seed, opts);
  std::cout << "runs        " << stats.runs << '\n'
            << "mean        " << fmt12(stats.mean) << '\n'
            << "std_error   " << fmt12(stats.std_error) << '\n'
            << "bbc         " << fmt12(dp::bbc(n, table)) << '\n'
            << "policy_bbc  " << fmt12(sim::policy_bbc(n, table)) << '\n';
  const auto policy = sim::policy_expectation(n, table);
  std::cout << "d  count  mean  std_error  1+E(n,d)  policy\n";
  for (const auto& [d, s] : stats.per_d)
    std::cout << d << ' ' << s.count << ' ' << fmt12(s.mean) << ' ' << fmt12(s.std_error) << ' '
              << fmt12(d == 0 ? 1.0 : 1.0 + table.value(n, d)) << ' ' << fmt12(d == 0 ? 1.0 : 1.0 + policy[d])
              << '\n';
  return 0;
}

int cmd_oracle(int n, bool allow_large, bool no_memo) {
  oracle::OracleOptions opts;
  opts.max_n = allow_large ? oracle::kHardMaxN : 3;
  opts.memoize = !no_memo;
  const auto table = dp::compute_table(n, dp::Mode::exact);
  bool all = true;
  std::cout << "d  oracle  dp  match\n";
  for (int d = 0; d <= n; ++d) {
    const mpq_class o = oracle::conditional_e(n, d, opts);
    const mpq_class& e = table.exact(n, d);
    const bool match = o == e;
    all = all && match;
    std::cout << d << ' ' << o.get_str() << ' ' << e.get_str() << ' ' << (match ? "yes" : "NO") << '\n';
  }
  std::cout << (all ? "verdict: all match\n" : "verdict: MISMATCH\n");
  return all ? 0 : 1;
}

int cmd_plot(int from, int to, const std::string& out, const std::string& table_file) {
  if (from < 1 || to < from) throw DomainError("plot range must satisfy 1 <= n-from <= n-to");
  const auto table = obtain_table(to, dp::Mode::f64, table_file, 1);
  std::vector<int> ns;
  for (int n = from; n <= to; ++n) ns.push_back(n);
  std::ofstream file(out);
  if (!file) throw Error("cannot open " + out);
  cli::emit_plot(ns, table, file);
  std::cout << "wrote " << out << " (" << ns.size() << " rows)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact black-box complexity of BinVal: tables, bounds, simulation, oracle"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "compute and save the E(n,d) table");
  int t_n = 0;
  std::string t_mode = "exact", t_out;
  unsigned t_threads = 1;
  table->add_option("--n-max", t_n)->required()->check(CLI::Range(1, dp::kFloatHardCap));
  table->add_option("--mode", t_mode)->check(CLI::IsMember({"exact", "f64"}));
  table->add_option("--out", t_out)->required();
  table->add_option("--threads", t_threads)->check(CLI::PositiveNumber);

  auto* bbc = app.add_subcommand("bbc", "print BBC(n)");
  int b_n = 0;
  std::string b_mode = "auto", b_table;
  unsigned b_threads = 1;
  bbc->add_option("--n", b_n)->required()->check(CLI::Range(1, dp::kFloatHardCap));
  bbc->add_option("--mode", b_mode)->check(CLI::IsMember({"auto", "exact", "f64"}));
  bbc->add_option("--table", b_table);
  bbc->add_option("--threads", b_threads)->check(CLI::PositiveNumber);

  auto* bnd = app.add_subcommand("bounds", "print the bounds report for n");
  int r_n = 0;
  std::string r_table;
  bool r_kv = false;
  bnd->add_option("--n", r_n)->required()->check(CLI::Range(1, dp::kFloatHardCap));
  bnd->add_option("--table", r_table);
  bnd->add_flag("--kv", r_kv, "also print key=value lines");

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo runs of the optimal solver");
  int s_n = 0;
  std::size_t s_runs = 0;
  std::uint64_t s_seed = 0;
  std::string s_table, s_logs;
  unsigned s_threads = std::max(1u, std::thread::hardware_concurrency());
  simulate->add_option("--n", s_n)->required()->check(CLI::Range(1, dp::kFloatHardCap));
  simulate->add_option("--runs", s_runs)->required()->check(CLI::PositiveNumber);
  simulate->add_option("--seed", s_seed)->required();
  simulate->add_option("--table", s_table);
  simulate->add_option("--emit-logs", s_logs);
  simulate->add_option("--threads", s_threads)->check(CLI::PositiveNumber);

  auto* orc = app.add_subcommand("oracle", "compare the brute-force oracle with the table");
  int o_n = 0;
  bool o_large = false, o_no_memo = false;
  orc->add_option("--n", o_n)->required()->check(CLI::Range(1, oracle::kHardMaxN));
  orc->add_flag("--allow-large", o_large, "permit n = 4");
  orc->add_flag("--no-memo", o_no_memo, "disable memoization");

  auto* plot = app.add_subcommand("plot", "write plots.dat rows for a range of n");
  int p_from = 0, p_to = 0;
  std::string p_out, p_table;
  plot->add_option("--n-from", p_from)->required();
  plot->add_option("--n-to", p_to)->required()->check(CLI::Range(1, dp::kFloatHardCap));
  plot->add_option("--out", p_out)->required();
  plot->add_option("--table", p_table);

  auto* self = app.add_subcommand("selftest", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    if (*table) return cmd_table(t_n, t_mode, t_out, t_threads);
    if (*bbc) return cmd_bbc(b_n, b_mode, b_table, b_threads);
    if (*bnd) return cmd_bounds(r_n, r_table, r_kv);
    if (*simulate) return cmd_simulate(s_n, s_runs, s_seed, s_table, s_logs, s_threads);
    if (*orc) return cmd_oracle(o_n, o_large, o_no_memo);
    if (*plot) return cmd_plot(p_from, p_to, p_out, p_table);
    if (*self) return run_selftest(std::cout) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
