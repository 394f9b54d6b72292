#include <doctest.h>

#include "qchom/bruteforce.hpp"
#include "qchom/closed_form.hpp"
#include "qchom/transfer.hpp"

using namespace qchom;

TEST_CASE("complete and quasi-complete sources") {
  CHECK(hom_complete(5, 4, HomClass::all) == 0);
  CHECK(hom_complete(3, 4, HomClass::all) == 12);
  CHECK(hom_complete(3, 5, HomClass::all) == 42);
  CHECK(hom_complete(3, 4, HomClass::surjective) == 0);
  CHECK(hom_quasi_complete(3, 3, HomClass::all) == 6);
  CHECK(hom_quasi_complete(4, 4, HomClass::bijective) == 4);
  CHECK(hom_quasi_complete(3, 4, HomClass::all) == 26);
  CHECK(hom_quasi_complete(3, 4, HomClass::injective) == 16);
}

TEST_CASE("every class of the clique families matches brute force, including m near n") {
  for (int n = 3; n <= 6; ++n)
    for (int m = 3; m <= 7; ++m)
      for (Family f : {Family::complete, Family::quasi_complete}) {
        const auto counts = count_all_classes(make_family({f, n}), quasi_complete_graph(m));
        for (HomClass c : kAllClasses) {
          CAPTURE(describe({f, n}));
          CAPTURE(m);
          CAPTURE(class_name(c));
          CHECK(hom_closed({f, n}, m, c) == counts[c]);
        }
      }
}

TEST_CASE("bad terms") {
  for (int m = 3; m <= 9; ++m) {
    CHECK(bad_term_path(4, m, 3) == 2);
    CHECK(bad_term_cycle(4, m, 4) == 2);
    CHECK(bad_term_cycle(5, m, 5) == 0);
  }
  CHECK(bad_term_path(3, 3, 1) == 4);
  CHECK(bad_term_path(4, 3, 1) == 10);
  CHECK(bad_term_path(4, 3, 2) == 4);
  CHECK(bad_term_cycle(4, 4, 1) == 16);
  CHECK(bad_term_cycle(4, 3, 2) == 8);
  CHECK(bad_term_broken_wheel(3, 4, 1) == 24);
  CHECK(bad_term_broken_wheel(3, 4, 2) == 8);
  CHECK(bad_term_broken_wheel(3, 4, 3) == 0);
  CHECK(bad_term_wheel(4, 4, 1) == 16);
  CHECK(bad_term_wheel(4, 4, 2) == 32);
  CHECK(bad_term_wheel(4, 4, 4) == 4);

  const auto bw = broken_wheel_split(3, 4, 1);
  CHECK(bw.hub_free == 8);
  CHECK(bw.hub_exceptional == 16);
  const auto w1 = wheel_split(4, 4, 1);
  CHECK(w1.hub_free == 0);
  CHECK(w1.hub_exceptional == 16);
  const auto w4 = wheel_split(4, 4, 4);
  CHECK(w4.hub_free == 4);
  CHECK(w4.hub_exceptional == 0);

  // Beyond the support the term is zero, not an error.
  CHECK(bad_term_path(4, 3, 9) == 0);
  CHECK(bad_term_cycle(4, 3, 5) == 0);
  CHECK_THROWS_AS(bad_term_path(4, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(bad_term_cycle(4, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(bad_term_cycle(3, 4, 1), std::invalid_argument);
}

TEST_CASE("whole counts") {
  CHECK(hom_path(3, 3) == 6);
  CHECK(hom_path(2, 4) == 10);
  CHECK(hom_path(4, 3) == 8);
  CHECK(hom_path(8, 3) == linear_hom_count(quasi_complete_graph(3), 8));
  CHECK(hom_cycle(4, 3) == 8);
  CHECK(hom_cycle(5, 3) == 0);
  CHECK(hom_cycle(4, 4) == 50);
  CHECK(hom_broken_wheel(3, 4) == 16);
  CHECK(hom_broken_wheel(5, 3) == 0);
  CHECK(hom_broken_wheel(10, 5) == hub_conditioned_count(quasi_complete_graph(5), 10, Rim::path));
  CHECK(hom_wheel(4, 4) == 20);
  for (int n = 3; n <= 8; ++n) CHECK(hom_wheel(n, 3) == 0);
  CHECK(hom_wheel(12, 6) == hub_conditioned_count(quasi_complete_graph(6), 12, Rim::cycle));
}

TEST_CASE("decomposition identity against brute force") {
  for (Family f : {Family::path, Family::cycle, Family::broken_wheel, Family::wheel})
    for (int n = min_size(f); n <= 6; ++n)
      for (int m = 3; m <= 5; ++m) {
        const Graph g = make_family({f, n});
        const auto terms = bad_terms(f, n, m);
        CHECK(terms.size() == g.edge_count() + 1);
        Count sum = 0;
        for (std::size_t k = 1; k < terms.size(); ++k) sum += terms[k];
        CHECK(base_count(f, n, m) == count_by_class(g, complete_graph(m), HomClass::all));
        CHECK(base_count(f, n, m) - sum == count_by_class(g, quasi_complete_graph(m), HomClass::all));
      }
}

TEST_CASE("large sizes agree with the transfer oracle") {
  for (int m : {3, 7, 12}) {
    const Graph h = quasi_complete_graph(m);
    CHECK(hom_path(60, m) == linear_hom_count(h, 60));
    CHECK(hom_cycle(60, m) == cyclic_hom_count(h, 60));
    CHECK(hom_broken_wheel(41, m) == hub_conditioned_count(h, 41, Rim::path));
    CHECK(hom_wheel(60, m) == hub_conditioned_count(h, 60, Rim::cycle));
  }
}

TEST_CASE("coverage of classes") {
  CHECK(class_covered(Family::complete, HomClass::bijective));
  CHECK(class_covered(Family::cycle, HomClass::all));
  CHECK_FALSE(class_covered(Family::cycle, HomClass::injective));
  CHECK_THROWS_WITH_AS(hom_closed({Family::wheel, 4}, 4, HomClass::injective),
                       doctest::Contains("only hom is covered"), std::invalid_argument);
  CHECK_THROWS_AS(hom_closed({Family::path, 4}, 2), std::invalid_argument);
}
