#include <doctest.h>

#include "qchom/bad_terms.hpp"
#include "qchom/bruteforce.hpp"

using namespace qchom;

namespace {

// Independent oracle for the spoke terms: count homomorphisms of the broken
// wheel or wheel into K_m with the hub on vertex 0 and exactly k rim
// vertices on vertex 1, doubled for the symmetric hub-on-1 case.
std::vector<Count> spoke_oracle(Geometry rim, int n, int m) {
  const Graph g = make_family({rim == Geometry::linear ? Family::broken_wheel : Family::wheel, n});
  const Graph k = complete_graph(m);
  std::vector<Count> out(n + 1, 0);
  std::vector<int> f(n + 1, 0);
  while (true) {
    if (f[0] == 0) {
      bool ok = true;
      for (const auto& e : g.edges())
        if (!k.adjacent(f[e.u], f[e.v])) ok = false;
      if (ok) {
        int on_b = 0;
        for (int v = 1; v <= n; ++v) on_b += f[v] == 1;
        out[on_b] += 2;
      }
    }
    int i = 0;
    while (i <= n && ++f[i] == m) f[i++] = 0;
    if (i > n) break;
  }
  out[0] = 0;
  return out;
}

}  // namespace

TEST_CASE("cluster terms match the exceptional histogram") {
  for (int m = 3; m <= 5; ++m) {
    for (int n = 2; n <= 8; ++n) {
      const auto hist = exceptional_histogram(make_family({Family::path, n}), m);
      const auto terms = cluster_terms(Geometry::linear, n, m, Evaluator::enumeration);
      REQUIRE(terms.size() == hist.size());
      for (std::size_t k = 1; k < hist.size(); ++k) CHECK(terms[k] == hist[k]);
    }
    for (int n = 4; n <= 8; ++n) {
      const auto hist = exceptional_histogram(make_family({Family::cycle, n}), m);
      const auto terms = cluster_terms(Geometry::cyclic, n, m, Evaluator::enumeration);
      REQUIRE(terms.size() == hist.size());
      for (std::size_t k = 1; k < hist.size(); ++k) CHECK(terms[k] == hist[k]);
    }
  }
}

TEST_CASE("spoke terms match a direct hub-on-exceptional count") {
  for (int m = 3; m <= 5; ++m)
    for (int n = 3; n <= 7; ++n)
      for (Geometry rim : {Geometry::linear, Geometry::cyclic}) {
        CAPTURE(m);
        CAPTURE(n);
        const auto expected = spoke_oracle(rim, n, m);
        const auto got = spoke_terms(rim, n, m, Evaluator::enumeration);
        REQUIRE(got.size() == expected.size());
        for (int k = 1; k <= n; ++k) CHECK(got[k] == expected[k]);
      }
}

TEST_CASE("run-length program equals enumeration") {
  for (int n = 2; n <= 16; ++n)
    for (int m : {3, 4, 7, 12}) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(run_length_cluster_terms(Geometry::linear, n, m) == enumerate_cluster_terms(Geometry::linear, n, m));
      if (n < 3) continue;
      CHECK(run_length_cluster_terms(Geometry::cyclic, n, m) == enumerate_cluster_terms(Geometry::cyclic, n, m));
      CHECK(run_length_spoke_terms(Geometry::linear, n, m) == enumerate_spoke_terms(Geometry::linear, n, m));
      CHECK(run_length_spoke_terms(Geometry::cyclic, n, m) == enumerate_spoke_terms(Geometry::cyclic, n, m));
    }
}

TEST_CASE("automatic evaluation switches above the enumeration limit") {
  const int n = kEnumerationLimit + 3;
  CHECK(cluster_terms(Geometry::cyclic, n, 5) == run_length_cluster_terms(Geometry::cyclic, n, 5));
  CHECK(cluster_terms(Geometry::cyclic, 9, 5) == enumerate_cluster_terms(Geometry::cyclic, 9, 5));
}

TEST_CASE("run colourings") {
  CHECK(run_colourings(5, 1) == 3);
  CHECK(run_colourings(5, 3) == 3 * 2 * 2);
  CHECK(run_colourings(3, 2) == 0);
}
