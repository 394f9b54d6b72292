#include "qchom/bad_terms.hpp"

#include <bit>
#include <stdexcept>

namespace qchom {

namespace {

// Number of edge positions carrying the index set.
int positions(Geometry geometry, int n) { return geometry == Geometry::linear ? n - 1 : n; }

void check_args(int n, int m, int min_n) {
  if (n < min_n) throw std::invalid_argument("bad terms: n = " + std::to_string(n) + " too small");
  if (m < 2) throw std::invalid_argument("bad terms require m >= 2");
}

void check_enumerable(int bits) {
  if (bits > 40) throw std::invalid_argument("subset enumeration limited to 40 positions");
}

std::vector<Count> run_table(int m, int max_len) {
  std::vector<Count> runs;
  for (int len = 0; len <= max_len; ++len) runs.push_back(run_colourings(m, len));
  return runs;
}

template <class Weight>
void accumulate_range(std::uint64_t lo, std::uint64_t hi, Weight&& weight, std::vector<Count>& by_k) {
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    Count w = weight(mask);
    if (w != 0) by_k[std::popcount(mask)] += w;
  }
}

template <class Weight>
std::vector<Count> by_popcount_serial(int bits, Weight&& weight) {
  std::vector<Count> by_k(bits + 1, 0);
  accumulate_range(1, std::uint64_t{1} << bits, weight, by_k);
  return by_k;
}

template <class Weight>
std::vector<Count> by_popcount_parallel(int bits, Weight&& weight) {
  const std::uint64_t total = std::uint64_t{1} << bits;
  constexpr std::uint64_t block = 1u << 12;
  const auto blocks = static_cast<std::int64_t>((total + block - 1) / block);
  std::vector<std::vector<Count>> partial(blocks, std::vector<Count>(bits + 1, 0));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(b) * block);
    const std::uint64_t hi = std::min(total, static_cast<std::uint64_t>(b + 1) * block);
    accumulate_range(lo, hi, weight, partial[b]);
  }

  std::vector<Count> by_k(bits + 1, 0);
  for (const auto& p : partial)
    for (int k = 0; k <= bits; ++k) by_k[k] += p[k];
  return by_k;
}

std::vector<Count> pad(std::vector<Count> v, std::size_t size) {
  v.resize(size, 0);
  return v;
}

// comp[k][s]: sum over compositions of s into k positive parts d of
// prod part_weight[d].
std::vector<std::vector<Count>> compositions(int total, const std::vector<Count>& part_weight) {
  std::vector<std::vector<Count>> comp(total + 1, std::vector<Count>(total + 1, 0));
  comp[0][0] = 1;
  for (int k = 1; k <= total; ++k)
    for (int s = k; s <= total; ++s) {
      Count acc = 0;
      for (int d = 1; d <= s - (k - 1); ++d)
        if (part_weight[d] != 0 && comp[k - 1][s - d] != 0) acc += comp[k - 1][s - d] * part_weight[d];
      comp[k][s] = std::move(acc);
    }
  return comp;
}

// Linear arrangement over positions 0..last: left end weight ends[a], each
// later index at distance d weighs step[d], right end weight ends[last - i_k].
std::vector<Count> linear_chain(int last, const std::vector<Count>& ends, const std::vector<Count>& step) {
  const int count = last + 1;
  std::vector<Count> by_k(count + 1, 0);
  std::vector<Count> current(count, 0);  // indexed by position of the latest index
  for (int s = 0; s < count; ++s) current[s] = ends[s];
  for (int k = 1; k <= count; ++k) {
    Count total = 0;
    for (int s = 0; s < count; ++s)
      if (current[s] != 0) total += current[s] * ends[last - s];
    by_k[k] = std::move(total);
    std::vector<Count> next(count, 0);
    for (int s = 0; s < count; ++s) {
      if (current[s] == 0) continue;
      for (int t = s + 1; t < count; ++t)
        if (step[t - s] != 0) next[t] += current[s] * step[t - s];
    }
    current.swap(next);
  }
  return by_k;
}

// Gap weight between consecutive indices at distance d: same cluster for
// d = 1, forbidden for d = 2, otherwise a new cluster (factor 2) after an
// internal gap of d - 2 vertices.
std::vector<Count> cluster_steps(const GapValues& values, int max_d) {
  std::vector<Count> step(max_d + 1, 0);
  if (max_d >= 1) step[1] = 1;
  for (int d = 3; d <= max_d; ++d) step[d] = 2 * values.p(d - 2);
  return step;
}

}  // namespace

Count run_colourings(int m, int len) {
  if (len == 0) return 1;
  return Count(m - 2) * power(Count(m - 3), len - 1);
}

Count spoke_weight(Geometry rim, int n, std::uint64_t mask, const std::vector<Count>& runs) {
  const std::uint64_t full = (n >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  mask &= full;
  if (mask & (mask >> 1)) return 0;
  if (rim == Geometry::cyclic && (mask & 1u) && (mask >> (n - 1) & 1u)) return 0;

  // Lengths of the maximal runs of unchosen rim vertices.
  std::vector<int> lengths;
  int current = 0;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1u) {
      if (current > 0) lengths.push_back(current);
      current = 0;
    } else {
      ++current;
    }
  }
  if (current > 0) {
    if (rim == Geometry::cyclic && !lengths.empty() && !(mask & 1u))
      lengths.front() += current;
    else
      lengths.push_back(current);
  }

  Count w = 2;
  for (int len : lengths) w *= runs[len];
  return w;
}

namespace serial {

std::vector<Count> enumerate_cluster_terms(Geometry geometry, int n, int m) {
  check_args(n, m, geometry == Geometry::linear ? 2 : 3);
  const int bits = positions(geometry, n);
  check_enumerable(bits);
  const GapValues values(m, n);
  auto by_k = by_popcount_serial(bits, [&](std::uint64_t mask) {
    return LowerVertexSet::from_mask(geometry, bits, mask).weight(values);
  });
  return pad(std::move(by_k), static_cast<std::size_t>(bits) + 1);
}

std::vector<Count> enumerate_spoke_terms(Geometry rim, int n, int m) {
  check_args(n, m, 3);
  check_enumerable(n);
  const auto runs = run_table(m, n);
  return by_popcount_serial(n, [&](std::uint64_t mask) { return spoke_weight(rim, n, mask, runs); });
}

}  // namespace serial

std::vector<Count> enumerate_cluster_terms(Geometry geometry, int n, int m) {
  check_args(n, m, geometry == Geometry::linear ? 2 : 3);
  const int bits = positions(geometry, n);
  check_enumerable(bits);
  const GapValues values(m, n);
  auto by_k = by_popcount_parallel(bits, [&](std::uint64_t mask) {
    return LowerVertexSet::from_mask(geometry, bits, mask).weight(values);
  });
  return pad(std::move(by_k), static_cast<std::size_t>(bits) + 1);
}

std::vector<Count> enumerate_spoke_terms(Geometry rim, int n, int m) {
  check_args(n, m, 3);
  check_enumerable(n);
  const auto runs = run_table(m, n);
  return by_popcount_parallel(n, [&](std::uint64_t mask) { return spoke_weight(rim, n, mask, runs); });
}

std::vector<Count> run_length_cluster_terms(Geometry geometry, int n, int m) {
  check_args(n, m, geometry == Geometry::linear ? 2 : 3);
  const GapValues values(m, n);

  if (geometry == Geometry::linear) {
    // Positions 0..n-2; boundary gaps weigh q (q_0 = 1 covers a touching end);
    // the first cluster contributes the leading factor 2.
    const int last = n - 2;
    std::vector<Count> ends(last + 1);
    for (int a = 0; a <= last; ++a) ends[a] = values.q(a);
    auto by_k = linear_chain(last, ends, cluster_steps(values, last));
    for (auto& t : by_k) t *= 2;
    return pad(std::move(by_k), static_cast<std::size_t>(n));
  }

  // Cyclic: pairing each set with each of its k elements gives n rotations of
  // every composition of n into k cyclic differences.
  const auto step = cluster_steps(values, n);
  const auto comp = compositions(n, step);
  std::vector<Count> by_k(n + 1, 0);
  for (int k = 1; k < n; ++k) {
    Count rotations = comp[k][n] * n;
    if (rotations % k != 0) throw std::logic_error("cyclic rotation count not divisible");
    by_k[k] = rotations / k;
  }
  by_k[n] = n % 2 == 0 ? 2 : 0;
  return by_k;
}

std::vector<Count> run_length_spoke_terms(Geometry rim, int n, int m) {
  check_args(n, m, 3);
  // Distance d >= 2 between chosen rim positions leaves a run of d - 1.
  std::vector<Count> step(n + 1, 0);
  for (int d = 2; d <= n; ++d) step[d] = run_colourings(m, d - 1);

  if (rim == Geometry::linear) {
    std::vector<Count> ends(n);
    for (int a = 0; a < n; ++a) ends[a] = run_colourings(m, a);
    auto by_k = linear_chain(n - 1, ends, step);
    for (auto& t : by_k) t *= 2;
    return pad(std::move(by_k), static_cast<std::size_t>(n) + 1);
  }

  const auto comp = compositions(n, step);
  std::vector<Count> by_k(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    Count rotations = comp[k][n] * n * 2;
    if (rotations % k != 0) throw std::logic_error("cyclic rotation count not divisible");
    by_k[k] = rotations / k;
  }
  return by_k;
}

std::vector<Count> cluster_terms(Geometry geometry, int n, int m, Evaluator ev) {
  if (ev == Evaluator::automatic)
    ev = positions(geometry, n) <= kEnumerationLimit ? Evaluator::enumeration : Evaluator::run_length;
  return ev == Evaluator::enumeration ? enumerate_cluster_terms(geometry, n, m)
                                      : run_length_cluster_terms(geometry, n, m);
}

std::vector<Count> spoke_terms(Geometry rim, int n, int m, Evaluator ev) {
  if (ev == Evaluator::automatic)
    ev = n <= kEnumerationLimit ? Evaluator::enumeration : Evaluator::run_length;
  return ev == Evaluator::enumeration ? enumerate_spoke_terms(rim, n, m) : run_length_spoke_terms(rim, n, m);
}

}  // namespace qchom
