#include <doctest.h>

#include <random>

#include "qchom/bruteforce.hpp"

using namespace qchom;

namespace {

// Plain m^N enumeration, no pruning; the reference for the backtracker.
ClassCounts naive(const Graph& g, const Graph& h) {
  const int n = g.vertex_count();
  const int m = h.vertex_count();
  ClassCounts out;
  std::vector<int> f(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& e : g.edges())
      if (!h.adjacent(f[e.u], f[e.v])) ok = false;
    if (ok) {
      std::vector<int> seen(m, 0);
      int distinct = 0;
      for (int x : f) distinct += seen[x]++ == 0;
      out.all += 1;
      if (distinct == n) out.injective += 1;
      if (distinct == m) out.surjective += 1;
      if (distinct == n && n == m) out.bijective += 1;
    }
    int i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

Graph random_graph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("documented counts") {
  CHECK(count_by_class(complete_graph(4), quasi_complete_graph(3), HomClass::all) == 0);
  CHECK(count_by_class(make_family({Family::cycle, 5}), quasi_complete_graph(3), HomClass::all) == 0);
  CHECK(count_by_class(quasi_complete_graph(3), quasi_complete_graph(3), HomClass::bijective) == 2);
  CHECK(count_by_class(complete_graph(3), quasi_complete_graph(4), HomClass::all) == 12);
  CHECK(count_by_class(quasi_complete_graph(3), quasi_complete_graph(4), HomClass::all) == 26);
  CHECK(count_by_class(quasi_complete_graph(3), quasi_complete_graph(4), HomClass::injective) == 16);
  CHECK(count_by_class(quasi_complete_graph(4), quasi_complete_graph(4), HomClass::bijective) == 4);
}

TEST_CASE("exceptional histograms") {
  using V = std::vector<Count>;
  CHECK(exceptional_histogram(make_family({Family::path, 3}), 3).bins == V{6, 4, 2});
  CHECK(exceptional_histogram(complete_graph(3), 3).bins == V{0, 6, 0, 0});
  CHECK(exceptional_histogram(make_family({Family::cycle, 4}), 3).bins == V{8, 0, 8, 0, 2});
  CHECK(exceptional_histogram(make_family({Family::path, 4}), 3).bins == V{8, 10, 4, 2});
  CHECK(exceptional_histogram(make_family({Family::broken_wheel, 3}), 4).bins == V{16, 24, 8, 0, 0, 0});
  CHECK(exceptional_histogram(make_family({Family::wheel, 4}), 4).bins == V{20, 16, 32, 0, 4, 0, 0, 0, 0});
  CHECK_THROWS_AS(exceptional_histogram(complete_graph(3), 2), std::invalid_argument);
}

TEST_CASE("backtracker agrees with naive enumeration on random graphs") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    const int m = 2 + trial % 4;
    const Graph g = random_graph(rng, n, 0.5);
    const Graph h = random_graph(rng, m, 0.7);
    const auto expected = naive(g, h);
    const auto got = count_all_classes(g, h);
    CAPTURE(trial);
    CHECK(got.all == expected.all);
    CHECK(got.injective == expected.injective);
    CHECK(got.surjective == expected.surjective);
    CHECK(got.bijective == expected.bijective);
    CHECK(count_by_class(g, h, HomClass::injective) == expected.injective);
  }
}

TEST_CASE("class ordering and histogram identities") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    const int m = 3 + trial % 4;
    const Graph g = random_graph(rng, n, 0.45);
    const auto c = count_all_classes(g, quasi_complete_graph(m));
    CHECK(c.bijective <= c.injective);
    CHECK(c.injective <= c.all);
    CHECK(c.surjective <= c.all);

    const auto hist = exceptional_histogram(g, m);
    CHECK(hist.size() == g.edge_count() + 1);
    CHECK(hist.total() == count_by_class(g, complete_graph(m), HomClass::all));
    CHECK(hist[0] == c.all);
  }
}

TEST_CASE("complete sources hit the exceptional pair at most once") {
  for (int n = 3; n <= 6; ++n)
    for (int m = 3; m <= 6; ++m) {
      const auto hist = exceptional_histogram(complete_graph(n), m);
      for (std::size_t k = 2; k < hist.size(); ++k) CHECK(hist[k] == 0);
    }
}
