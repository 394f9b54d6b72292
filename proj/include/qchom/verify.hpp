#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qchom/count.hpp"
#include "qchom/graph.hpp"

namespace qchom {

struct FamilyRange {
  Family family;
  int n_lo;
  int n_hi;
};

struct Grid {
  std::vector<FamilyRange> families;
  int m_lo = 3;
  int m_hi = 6;

  // Every family from its minimum size up to n_max.
  static Grid uniform(int n_max, int m_max);
};

struct Mismatch {
  std::string family;
  int n = 0;
  int m = 0;
  int k = -1;  // -1 where no term index applies
  std::string expected;
  std::string got;
  std::string what;

  std::string describe() const;
};

struct CheckResult {
  std::string name;
  std::size_t checks = 0;
  std::optional<Mismatch> failure;
  double seconds = 0;

  bool ok() const { return !failure && checks > 0; }
  std::string summary() const;
};

// Closed form against the backtracking oracle, every class with a closed form.
CheckResult check_bruteforce_equivalence(const Grid& grid);

// bad_term(n, m, k) against exceptional_histogram[k] for every k, for the
// path, cycle, broken wheel and wheel ranges of the grid.
CheckResult check_term_histograms(const Grid& grid);

// sum_k histogram[k] = hom(G, K_m), histogram[0] = hom(G, K_m^1),
// base_count - sum_k bad_term = closed form, and histogram[k >= 2] = 0 for
// complete sources.
CheckResult check_histogram_identities(const Grid& grid);

// Closed forms against the transfer-matrix oracle for n <= n_max, m <= m_max,
// plus the transfer oracle against the chromatic base counts on K_m.
CheckResult check_transfer_equivalence(int n_max, int m_max);
CheckResult check_transfer_base_counts(int n_max, int m_max);

// Odd cycles and odd broken wheels (up to 17 rim vertices) and wheels with
// 3..8 spokes admit no homomorphism into K_3^1.
CheckResult check_k3_vanishing();

// Gap polynomials read off the level graphs against the printed expansions
// for i = 1..5, including the number of summands.
CheckResult check_gap_goldens();

// Level-graph path sums against the recurrence for 0 <= i <= i_max, and the
// path count against the count of 0/1 strings with fixed 0 ends and no "11".
CheckResult check_gap_recurrence(int i_max);

// s^{n-1} = 2; t^n = 2 or 0 by parity; t^{n-1} = 0; spoke terms vanish past
// the largest independent rim set.
CheckResult check_special_constants(int n_max, int m_max);

// Run-length dynamic program against subset enumeration.
CheckResult check_run_length(int n_max, int m_max);

// For every source with at most max_vertices vertices, values at
// m = 3..N+4 fit a degree <= N integer-valued polynomial whose value at N+5
// matches the closed form.
CheckResult check_polynomial_fit(int max_vertices);

// Factorial-quotient and printed binomial forms of the quasi-complete count
// agree term by term for 3 <= n, n + 2 <= m <= m_max.
CheckResult check_quasi_complete_forms(int m_max);

// Two profile renders are byte-identical.
CheckResult check_profile_determinism(int m, int n_max);

struct ErrataRow {
  std::string family;
  int n = 0;
  int m = 0;
  int k = 0;  // 0 for whole-count rows
  Rational printed;
  Count normative;
  Count oracle;
};

// Path and cycle per-k rows for n <= n_max, 3 <= m <= m_max, and
// quasi-complete whole-count rows for n + 2 <= m <= m_max.
std::vector<ErrataRow> errata_rows(int n_max, int m_max);

// Header family,n,m,k,printed_value,normative_value,oracle_value.
std::string errata_csv(const std::vector<ErrataRow>& rows);

// Every normative value equals its oracle value.
CheckResult check_errata(const std::vector<ErrataRow>& rows);

// Which printed summands differ from their normative counterparts somewhere
// on the grid (index 0 = summand 1).
struct SummandDeltas {
  std::array<bool, 4> path{};
  std::array<bool, 4> cycle{};
  std::array<bool, 5> quasi_complete{};
};
SummandDeltas summand_deltas(int n_max, int m_max);
std::string describe(const SummandDeltas& d);

struct VerifyConfig {
  int n_max = 7;
  int m_max = 6;
  int transfer_n_max = 18;
  int transfer_m_max = 12;
  int poly_i_max = 30;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<ErrataRow> errata;
  SummandDeltas deltas;

  bool ok() const;
  const CheckResult* first_failure() const;
};

VerifyReport run_verify(const VerifyConfig& config);

}  // namespace qchom
