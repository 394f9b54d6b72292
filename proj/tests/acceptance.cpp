// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sys/wait.h>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qchom/count.hpp"
#include "qchom/verify.hpp"

using namespace qchom;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

Verdict from(const CheckResult& r, double limit_seconds = 0) {
  std::ostringstream os;
  os << r.checks << " checks in " << std::fixed;
  os.precision(1);
  os << r.seconds << "s";
  if (r.failure) os << "; " << r.failure->describe();
  bool pass = r.ok();
  if (limit_seconds > 0 && r.seconds >= limit_seconds) {
    pass = false;
    os << "; over the " << limit_seconds << "s limit";
  }
  return {pass, os.str()};
}

Verdict both(const Verdict& a, const Verdict& b) { return {a.pass && b.pass, a.detail + " | " + b.detail}; }

int shell(const std::string& args) {
  const std::string cmd = std::string("\"") + QCHOM_CLI_PATH + "\" " + args;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

Grid acceptance_grid() {
  Grid g;
  g.families = {{Family::complete, 3, 7},     {Family::quasi_complete, 3, 7}, {Family::path, 2, 8},
                {Family::cycle, 4, 8},        {Family::broken_wheel, 3, 7},   {Family::wheel, 3, 7}};
  g.m_lo = 3;
  g.m_hi = 6;
  return g;
}

Verdict errata_criterion(const fs::path& dir) {
  const auto errata = dir / "errata.csv";
  const auto log = dir / "verify.log";
  const int code = shell("verify --errata \"" + errata.string() + "\" > \"" + log.string() + "\" 2>&1");
  if (code != 0) return {false, "verify exited with " + std::to_string(code) + ":\n" + slurp(log)};

  const auto rows = parse_csv(slurp(errata));
  if (rows.empty() || rows[0] != std::vector<std::string>{"family", "n", "m", "k", "printed_value",
                                                          "normative_value", "oracle_value"})
    return {false, "errata CSV header missing"};

  std::size_t mismatches = 0, deltas = 0;
  bool anchor = false;
  bool qc_delta = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 7) return {false, "malformed errata row " + std::to_string(i)};
    if (r[5] != r[6]) ++mismatches;
    if (r[4] != r[5]) {
      ++deltas;
      if (r[0] == "quasi-complete") qc_delta = true;
    }
    if (r == std::vector<std::string>{"path", "4", "3", "1", "6", "10", "10"}) anchor = true;
  }

  // Summand-level attribution of the deltas.
  const auto d = summand_deltas(7, 6);
  const bool path_ok = d.path[0] && d.path[1] && d.path[2] && !d.path[3];
  const bool cycle_ok = !d.cycle[0] && !d.cycle[1] && d.cycle[2] && !d.cycle[3];
  const bool qc_ok = d.quasi_complete[1] && !d.quasi_complete[0] && !d.quasi_complete[2] && !d.quasi_complete[3] &&
                     !d.quasi_complete[4];

  std::ostringstream os;
  os << rows.size() - 1 << " rows, " << mismatches << " normative/oracle mismatches, " << deltas
     << " printed deltas; anchor row " << (anchor ? "present" : "missing") << "; " << describe(d);
  return {mismatches == 0 && anchor && deltas > 0 && qc_delta && path_ok && cycle_ok && qc_ok, os.str()};
}

Verdict determinism_criterion(const fs::path& dir) {
  const std::string args = "profile --m 5 --families path,cycle,wheel,broken-wheel --n-max 10 --format csv --out ";
  const auto a = dir / "profile_a.csv";
  const auto b = dir / "profile_b.csv";
  if (shell(args + "\"" + a.string() + "\"") != 0 || shell(args + "\"" + b.string() + "\"") != 0)
    return {false, "profile run failed"};
  const auto ta = slurp(a);
  const auto tb = slurp(b);
  const bool same = !ta.empty() && ta == tb;
  return {same, std::to_string(ta.size()) + " bytes, " + (same ? "identical" : "different")};
}

}  // namespace

int main() {
  const auto dir = fs::temp_directory_path() / "qchom_acceptance";
  fs::create_directories(dir);
  const Grid grid = acceptance_grid();

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"brute-force equivalence grid", [&] { return from(check_bruteforce_equivalence(grid), 300); }},
      {"per-k term equivalence", [&] { return from(check_term_histograms(grid)); }},
      {"transfer equivalence n <= 18, m <= 12", [] { return from(check_transfer_equivalence(18, 12), 120); }},
      {"odd rims and wheels vanish into K_3^1", [] { return from(check_k3_vanishing()); }},
      {"golden gap polynomials and recurrence to i = 30",
       [] { return both(from(check_gap_goldens()), from(check_gap_recurrence(30))); }},
      {"special constants n <= 10, m <= 8", [] { return from(check_special_constants(10, 8)); }},
      {"errata reconciliation", [&] { return errata_criterion(dir); }},
      {"quasi-chromatic polynomiality", [] { return from(check_polynomial_fit(8)); }},
      {"profile determinism", [&] { return determinism_criterion(dir); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << v.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
