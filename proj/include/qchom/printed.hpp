#pragma once

#include <array>

#include "qchom/count.hpp"
#include "qchom/graph.hpp"

namespace qchom {

// Literal evaluators of the displayed four-summand expressions for the path
// (s) and cycle (t) bad terms, kept for reconciliation against the normative
// cluster/gap weights. Index sets are split by whether they touch the first
// and the last edge position:
//
//   summand 1: i_1 = 0, i_k = last    summand 2: i_1 = 0, i_k < last
//   summand 3: i_1 > 0, i_k = last    summand 4: i_1 > 0, i_k < last
//
// with last = n-2 for paths and n-1 for cycles.
struct SummandBreakdown {
  // True when k hits a closed special case (k = n-1 for paths, k >= n-1 for
  // cycles); the arrays are then unused.
  bool special = false;
  std::array<Rational, 4> printed{};
  std::array<Count, 4> normative{};
};

// family is Family::path or Family::cycle; k >= 1, zero beyond the support.
Rational as_printed_term(Family family, int n, int m, int k);
SummandBreakdown summand_breakdown(Family family, int n, int m, int k);

// The five summands of hom(K_n^1, K_m^1) for m > n in the factorial-quotient
// form of the statement. The last two quotients need m >= n + 2.
std::array<Count, 5> quasi_complete_factorial_terms(int n, int m);

// The same five summands in the binomial form as printed, where the shared
// vertex term carries the factor (m - n).
std::array<Count, 5> quasi_complete_printed_binomial_terms(int n, int m);

// Corrected binomial summands: the shared vertex term carries (m - n + 1).
std::array<Count, 5> quasi_complete_corrected_terms(int n, int m);

// Sum of quasi_complete_factorial_terms.
Count printed_quasi_complete_hom(int n, int m);

}  // namespace qchom
