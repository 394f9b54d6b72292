#include "qchom/printed.hpp"

#include <bit>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qchom/bad_terms.hpp"
#include "qchom/gap_polynomial.hpp"
#include "qchom/lower_vertex_set.hpp"

namespace qchom {

namespace {

constexpr int kPrintedLimit = 21;

void check(Family family, int n, int m, int k) {
  if (family != Family::path && family != Family::cycle)
    throw std::invalid_argument("printed terms exist only for path and cycle");
  validate({family, n});
  if (m < 3) throw std::invalid_argument("printed terms require m >= 3");
  if (k < 1) throw std::invalid_argument("bad term index k must be >= 1");
  if (n > kPrintedLimit) throw std::invalid_argument("printed terms enumerate subsets; n too large");
}

std::vector<int> indices_of(std::uint64_t mask, int bits) {
  std::vector<int> out;
  for (int i = 0; i < bits; ++i)
    if (mask >> i & 1u) out.push_back(i);
  return out;
}

// prod over consecutive differences d > 2 of 2 p_{d-2}(m); the printed sums
// only exclude d = 2 between consecutive listed indices.
std::optional<Count> inner_product(const std::vector<int>& idx, const GapValues& values) {
  Count prod = 1;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const int d = idx[j] - idx[j - 1];
    if (d == 2) return std::nullopt;
    if (d > 2) prod *= 2 * values.p(d - 2);
  }
  return prod;
}

SummandBreakdown breakdown(Family family, int n, int m, int k) {
  SummandBreakdown out;
  const bool path = family == Family::path;
  const int bits = path ? n - 1 : n;
  const int last = bits - 1;
  const Geometry geometry = path ? Geometry::linear : Geometry::cyclic;
  const GapValues values(m, n);

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << bits); ++mask) {
    if (std::popcount(mask) != k) continue;
    const auto idx = indices_of(mask, bits);
    const int first = idx.front();
    const int final = idx.back();
    const int slot = (first == 0 ? 0 : 2) + (final == last ? 0 : 1);

    const LowerVertexSet set(geometry, bits, idx);
    out.normative[slot] += set.weight(values);

    const auto inner = inner_product(idx, values);
    if (!inner) continue;
    const Rational w(*inner);
    if (path) {
      switch (slot) {
        case 0: out.printed[0] += w / 2; break;
        case 1: out.printed[1] += w * values.q(last - final); break;
        case 2: out.printed[2] += values.q(first) * w; break;
        case 3: out.printed[3] += 2 * values.q(first) * w * values.q(last - final); break;
      }
    } else {
      switch (slot) {
        case 0: out.printed[0] += w; break;
        case 1:
          if (final < n - 2) out.printed[1] += w * 2 * values.p(n - final - 2);
          break;
        case 2:
          if (first > 1) out.printed[2] += 2 * values.p(first) * w;
          break;
        case 3: out.printed[3] += 2 * values.p(first + n - final - 2) * w; break;
      }
    }
  }
  return out;
}

}  // namespace

SummandBreakdown summand_breakdown(Family family, int n, int m, int k) {
  check(family, n, m, k);
  SummandBreakdown out;
  const int support = family == Family::path ? n - 1 : n;
  if (k > support) return out;
  if (k >= n - 1) {
    out.special = true;
    return out;
  }
  return breakdown(family, n, m, k);
}

Rational as_printed_term(Family family, int n, int m, int k) {
  check(family, n, m, k);
  if (family == Family::path) {
    if (k > n - 1) return 0;
    if (k == n - 1) return 2;
  } else {
    if (k > n) return 0;
    if (k == n) return n % 2 == 0 ? 2 : 0;
    if (k == n - 1) return 0;
  }
  const auto b = breakdown(family, n, m, k);
  Rational total = 0;
  for (const auto& s : b.printed) total += s;
  return total;
}

namespace {

void check_quasi(int n, int m) {
  validate({Family::quasi_complete, n});
  if (m <= n) throw std::invalid_argument("quasi-complete summands need m > n");
}

}  // namespace

std::array<Count, 5> quasi_complete_factorial_terms(int n, int m) {
  check_quasi(n, m);
  if (m < n + 2) throw std::invalid_argument("factorial form undefined at m = n + 1");
  const Count top = factorial(m - 2);
  return {2 * top / factorial(m - n), 2 * (n - 1) * top / factorial(m - n - 1), 2 * top / factorial(m - n - 1),
          top / factorial(m - n - 2), top / factorial(m - n - 1)};
}

std::array<Count, 5> quasi_complete_printed_binomial_terms(int n, int m) {
  check_quasi(n, m);
  const Count shared = binomial(m - 2, n - 2) * factorial(n - 2);
  return {2 * shared, 2 * (n - 1) * shared * (m - n), 2 * binomial(m - 2, n - 1) * factorial(n - 1),
          binomial(m - 2, n) * factorial(n), binomial(m - 2, n - 1) * factorial(n - 1)};
}

std::array<Count, 5> quasi_complete_corrected_terms(int n, int m) {
  auto terms = quasi_complete_printed_binomial_terms(n, m);
  terms[1] = 2 * (n - 1) * binomial(m - 2, n - 2) * factorial(n - 2) * (m - n + 1);
  return terms;
}

Count printed_quasi_complete_hom(int n, int m) {
  Count total = 0;
  for (const auto& t : quasi_complete_factorial_terms(n, m)) total += t;
  return total;
}

}  // namespace qchom
