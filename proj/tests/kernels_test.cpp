#include <doctest.h>

#include "qchom/bad_terms.hpp"
#include "qchom/bruteforce.hpp"
#include "qchom/gap_polynomial.hpp"
#include "qchom/transfer.hpp"

using namespace qchom;

// The OpenMP kernels must produce exactly what their serial references do.

TEST_CASE("brute force") {
  for (Family f : kAllFamilies)
    for (int n = min_size(f); n <= 6; ++n)
      for (int m = 3; m <= 5; ++m) {
        const Graph g = make_family({f, n});
        const Graph h = quasi_complete_graph(m);
        const auto a = count_all_classes(g, h);
        const auto b = serial::count_all_classes(g, h);
        CHECK(a.all == b.all);
        CHECK(a.injective == b.injective);
        CHECK(a.surjective == b.surjective);
        CHECK(a.bijective == b.bijective);
        CHECK(exceptional_histogram(g, m).bins == serial::exceptional_histogram(g, m).bins);
      }
}

TEST_CASE("hub conditioning") {
  for (int m = 3; m <= 9; m += 3)
    for (int n = 3; n <= 20; n += 4)
      for (Rim rim : {Rim::path, Rim::cycle})
        CHECK(hub_conditioned_count(quasi_complete_graph(m), n, rim) ==
              serial::hub_conditioned_count(quasi_complete_graph(m), n, rim));
}

TEST_CASE("level-graph path sums") {
  for (int i : {1, 5, 12, 13, 16, 22})
    for (GapKind kind : {GapKind::p, GapKind::q}) {
      const auto a = gap_path_sum(kind, i);
      const auto b = serial::gap_path_sum(kind, i);
      CHECK(a.polynomial == b.polynomial);
      CHECK(a.summands == b.summands);
    }
}

TEST_CASE("subset enumeration") {
  for (int n = 3; n <= 17; n += 2)
    for (Geometry g : {Geometry::linear, Geometry::cyclic}) {
      CHECK(enumerate_cluster_terms(g, n, 5) == serial::enumerate_cluster_terms(g, n, 5));
      CHECK(enumerate_spoke_terms(g, n, 5) == serial::enumerate_spoke_terms(g, n, 5));
    }
}
