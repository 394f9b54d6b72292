#pragma once

#include "qchom/count.hpp"
#include "qchom/graph.hpp"

namespace qchom {

enum class Rim { path, cycle };

// hom(P_n, H): sum of the entries of A^(n-1), by iterating the all-ones row
// vector through the adjacency matrix. Requires n >= 2.
Count linear_hom_count(const Graph& target, int n);

// hom(C_n, H) = trace(A^n), by repeated squaring. Requires n >= 3.
Count cyclic_hom_count(const Graph& target, int n);

// hom(BW_n, H) (rim = path) or hom(W_n, H) (rim = cycle): for each hub image
// h, count rim maps into the subgraph induced on the neighbours of h.
// Requires n >= 3.
Count hub_conditioned_count(const Graph& target, int n, Rim rim);

namespace serial {
Count hub_conditioned_count(const Graph& target, int n, Rim rim);
}

}  // namespace qchom
