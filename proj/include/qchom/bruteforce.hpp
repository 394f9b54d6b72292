#pragma once

#include <vector>

#include "qchom/count.hpp"
#include "qchom/graph.hpp"

namespace qchom {

struct ClassCounts {
  Count all;
  Count injective;
  Count surjective;
  Count bijective;

  const Count& operator[](HomClass c) const;
};

// Dense over k = 0..|E(G)|: entry k counts homomorphisms G -> K_m sending
// exactly k edges of G onto the exceptional pair {0,1}.
struct ExceptionalHistogram {
  std::vector<Count> bins;

  const Count& operator[](std::size_t k) const { return bins[k]; }
  std::size_t size() const { return bins.size(); }
  Count total() const;
};

// Exhaustive backtracking over vertex maps, vertices assigned in index order,
// every partial map rejected as soon as an already-decided edge breaks.
// Injectivity and surjectivity are tested on complete assignments.
// Targets are limited to 64 vertices.
ClassCounts count_all_classes(const Graph& source, const Graph& target);
Count count_by_class(const Graph& source, const Graph& target, HomClass cls);

// Throws std::invalid_argument for m < 3.
ExceptionalHistogram exceptional_histogram(const Graph& source, int m);

// Single-threaded reference versions of the two kernels above.
namespace serial {
ClassCounts count_all_classes(const Graph& source, const Graph& target);
ExceptionalHistogram exceptional_histogram(const Graph& source, int m);
}  // namespace serial

}  // namespace qchom
