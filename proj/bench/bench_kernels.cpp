// Serial reference kernels against their OpenMP versions, plus the
// enumeration-vs-run-length crossover for the bad terms.
#include <chrono>
#include <cstdio>
#include <omp.h>
#include <string>

#include "qchom/bad_terms.hpp"
#include "qchom/bruteforce.hpp"
#include "qchom/gap_polynomial.hpp"
#include "qchom/transfer.hpp"

using namespace qchom;

namespace {

template <class F>
double seconds(F&& f, int repeats = 1) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / repeats;
}

void row(const std::string& kernel, const std::string& size, double serial, double fast) {
  std::printf("%-28s %-16s %10.4f %10.4f %8.2fx\n", kernel.c_str(), size.c_str(), serial, fast, serial / fast);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %-16s %10s %10s %9s\n", "kernel", "size", "serial s", "other s", "speedup");

  for (int n : {7, 8}) {
    const Graph source = make_family({Family::wheel, n});
    const Graph target = quasi_complete_graph(7);
    row("bruteforce classes", "W" + std::to_string(n) + " -> K7^1", seconds([&] { serial::count_all_classes(source, target); }),
        seconds([&] { count_all_classes(source, target); }));
  }
  {
    const Graph source = make_family({Family::cycle, 9});
    row("exceptional histogram", "C9, m=6", seconds([&] { serial::exceptional_histogram(source, 6); }),
        seconds([&] { exceptional_histogram(source, 6); }));
  }
  {
    const Graph target = quasi_complete_graph(40);
    row("hub-conditioned transfer", "W60 -> K40^1",
        seconds([&] { serial::hub_conditioned_count(target, 60, Rim::cycle); }),
        seconds([&] { hub_conditioned_count(target, 60, Rim::cycle); }));
  }
  for (int i : {20, 26}) {
    row("level-graph path sum", "p_" + std::to_string(i), seconds([&] { serial::gap_path_sum(GapKind::p, i); }),
        seconds([&] { gap_path_sum(GapKind::p, i); }));
  }
  for (int n : {14, 18, 20}) {
    row("cluster terms enum (par)", "cycle n=" + std::to_string(n),
        seconds([&] { serial::enumerate_cluster_terms(Geometry::cyclic, n, 8); }),
        seconds([&] { enumerate_cluster_terms(Geometry::cyclic, n, 8); }));
    row("cluster terms enum vs DP", "cycle n=" + std::to_string(n),
        seconds([&] { enumerate_cluster_terms(Geometry::cyclic, n, 8); }),
        seconds([&] { run_length_cluster_terms(Geometry::cyclic, n, 8); }, 10));
    row("spoke terms enum vs DP", "wheel n=" + std::to_string(n),
        seconds([&] { enumerate_spoke_terms(Geometry::cyclic, n, 8); }),
        seconds([&] { run_length_spoke_terms(Geometry::cyclic, n, 8); }, 10));
  }
  return 0;
}
