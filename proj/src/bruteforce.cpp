#include "qchom/bruteforce.hpp"

#include <cstdint>
#include <stdexcept>

namespace qchom {

const Count& ClassCounts::operator[](HomClass c) const {
  switch (c) {
    case HomClass::all: return all;
    case HomClass::injective: return injective;
    case HomClass::surjective: return surjective;
    case HomClass::bijective: return bijective;
  }
  throw std::logic_error("unknown class");
}

Count ExceptionalHistogram::total() const {
  Count t = 0;
  for (const auto& b : bins) t += b;
  return t;
}

namespace {

// Neighbours of each source vertex with a smaller index; these are exactly
// the edges decided at the moment the vertex is assigned.
std::vector<std::vector<int>> back_neighbors(const Graph& g) {
  std::vector<std::vector<int>> back(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.neighbors(v))
      if (u < v) back[v].push_back(u);
  return back;
}

struct Tally {
  std::uint64_t all = 0, injective = 0, surjective = 0, bijective = 0;

  void operator+=(const Tally& o) {
    all += o.all;
    injective += o.injective;
    surjective += o.surjective;
    bijective += o.bijective;
  }
};

class ClassSearch {
 public:
  ClassSearch(const Graph& source, const Graph& target)
      : target_(target),
        back_(back_neighbors(source)),
        source_n_(source.vertex_count()),
        target_n_(target.vertex_count()),
        image_(source_n_, -1),
        uses_(target_n_, 0) {
    if (target_n_ > 64) throw std::invalid_argument("brute-force target limited to 64 vertices");
  }

  bool fits(int v, int c) const {
    for (int u : back_[v])
      if (!target_.adjacent(image_[u], c)) return false;
    return true;
  }

  void assign(int v, int c) {
    image_[v] = c;
    if (uses_[c]++ == 0) ++distinct_;
  }

  void unassign(int v) {
    const int c = image_[v];
    if (--uses_[c] == 0) --distinct_;
    image_[v] = -1;
  }

  void run(int v, Tally& t) {
    if (v == source_n_) {
      ++t.all;
      const bool inj = distinct_ == source_n_;
      const bool sur = distinct_ == target_n_;
      t.injective += inj;
      t.surjective += sur;
      t.bijective += inj && sur;
      return;
    }
    for (int c = 0; c < target_n_; ++c) {
      if (!fits(v, c)) continue;
      assign(v, c);
      run(v + 1, t);
      unassign(v);
    }
  }

  int source_size() const { return source_n_; }
  int target_size() const { return target_n_; }

 private:
  const Graph& target_;
  std::vector<std::vector<int>> back_;
  int source_n_;
  int target_n_;
  std::vector<int> image_;
  std::vector<int> uses_;
  int distinct_ = 0;
};

class HistogramSearch {
 public:
  HistogramSearch(const Graph& source, int m)
      : back_(back_neighbors(source)),
        source_n_(source.vertex_count()),
        m_(m),
        image_(source_n_, -1) {}

  // Number of newly decided edges landing on {0,1}, or -1 if v -> c clashes
  // with an already-assigned neighbour.
  int exceptional_edges(int v, int c) const {
    int k = 0;
    for (int u : back_[v]) {
      if (image_[u] == c) return -1;
      if (image_[u] + c == 1) ++k;  // images {0,1}
    }
    return k;
  }

  void run(int v, int k, std::vector<std::uint64_t>& bins) {
    if (v == source_n_) {
      ++bins[k];
      return;
    }
    for (int c = 0; c < m_; ++c) {
      const int dk = exceptional_edges(v, c);
      if (dk < 0) continue;
      image_[v] = c;
      run(v + 1, k + dk, bins);
      image_[v] = -1;
    }
  }

  void set(int v, int c) { image_[v] = c; }
  int source_size() const { return source_n_; }

 private:
  std::vector<std::vector<int>> back_;
  int source_n_;
  int m_;
  std::vector<int> image_;
};

ClassCounts to_counts(const Tally& t) {
  return {Count(t.all), Count(t.injective), Count(t.surjective), Count(t.bijective)};
}

ExceptionalHistogram to_histogram(const std::vector<std::uint64_t>& bins) {
  ExceptionalHistogram h;
  h.bins.reserve(bins.size());
  for (auto b : bins) h.bins.emplace_back(b);
  return h;
}

void check_m(int m) {
  if (m < 3) throw std::invalid_argument("exceptional histogram requires m >= 3");
}

// Valid images for the first two source vertices; each becomes one parallel task.
template <class Fits>
std::vector<std::pair<int, int>> seed_prefixes(int source_n, int target_n, Fits fits) {
  std::vector<std::pair<int, int>> seeds;
  for (int a = 0; a < target_n; ++a) {
    if (source_n < 2) {
      seeds.emplace_back(a, -1);
      continue;
    }
    for (int b = 0; b < target_n; ++b)
      if (fits(a, b)) seeds.emplace_back(a, b);
  }
  return seeds;
}

}  // namespace

namespace serial {

ClassCounts count_all_classes(const Graph& source, const Graph& target) {
  ClassSearch search(source, target);
  Tally t;
  search.run(0, t);
  return to_counts(t);
}

ExceptionalHistogram exceptional_histogram(const Graph& source, int m) {
  check_m(m);
  HistogramSearch search(source, m);
  std::vector<std::uint64_t> bins(source.edge_count() + 1, 0);
  search.run(0, 0, bins);
  return to_histogram(bins);
}

}  // namespace serial

ClassCounts count_all_classes(const Graph& source, const Graph& target) {
  if (source.vertex_count() == 0 || target.vertex_count() == 0)
    return serial::count_all_classes(source, target);

  const bool first_edge = source.vertex_count() >= 2 && source.adjacent(0, 1);
  const auto seeds = seed_prefixes(source.vertex_count(), target.vertex_count(),
                                   [&](int a, int b) { return !first_edge || target.adjacent(a, b); });

  std::vector<Tally> partial(seeds.size());
  const auto count = static_cast<std::int64_t>(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < count; ++s) {
    ClassSearch search(source, target);
    const auto [a, b] = seeds[s];
    search.assign(0, a);
    if (b < 0) {
      search.run(1, partial[s]);
    } else {
      search.assign(1, b);
      search.run(2, partial[s]);
    }
  }

  Tally t;
  for (const auto& p : partial) t += p;
  return to_counts(t);
}

Count count_by_class(const Graph& source, const Graph& target, HomClass cls) {
  return count_all_classes(source, target)[cls];
}

ExceptionalHistogram exceptional_histogram(const Graph& source, int m) {
  check_m(m);
  if (source.vertex_count() == 0) return serial::exceptional_histogram(source, m);

  const bool first_edge = source.vertex_count() >= 2 && source.adjacent(0, 1);
  const auto seeds =
      seed_prefixes(source.vertex_count(), m, [&](int a, int b) { return !first_edge || a != b; });

  const std::size_t width = source.edge_count() + 1;
  std::vector<std::vector<std::uint64_t>> partial(seeds.size(), std::vector<std::uint64_t>(width, 0));
  const auto count = static_cast<std::int64_t>(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < count; ++s) {
    HistogramSearch search(source, m);
    const auto [a, b] = seeds[s];
    search.set(0, a);
    if (b < 0) {
      search.run(1, 0, partial[s]);
    } else {
      const int k = first_edge && a + b == 1 ? 1 : 0;
      search.set(1, b);
      search.run(2, k, partial[s]);
    }
  }

  std::vector<std::uint64_t> bins(width, 0);
  for (const auto& p : partial)
    for (std::size_t k = 0; k < width; ++k) bins[k] += p[k];
  return to_histogram(bins);
}

}  // namespace qchom
