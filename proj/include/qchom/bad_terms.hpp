#pragma once

#include <cstdint>
#include <vector>

#include "qchom/count.hpp"
#include "qchom/lower_vertex_set.hpp"

namespace qchom {

// How the per-k bad terms are evaluated.
//   enumeration  every subset of edge positions, weighted by its cluster/gap
//                decomposition (the normative evaluator)
//   run_length   dynamic program over consecutive index differences
//   automatic    enumeration up to kEnumerationLimit positions, run_length above
enum class Evaluator { automatic, enumeration, run_length };

inline constexpr int kEnumerationLimit = 12;

// Terms for homomorphisms G -> K_m sending exactly k source edges onto the
// exceptional pair. Results are dense vectors indexed by k, entry 0 unused (0).
// These accept m >= 2 so the hub-free wheel terms can recurse to m - 1.
//
//   cluster_terms(linear, n, m)  k = 0..n-1   path on n vertices
//   cluster_terms(cyclic, n, m)  k = 0..n     cycle on n vertices
std::vector<Count> cluster_terms(Geometry geometry, int n, int m, Evaluator ev = Evaluator::automatic);

// Hub on an exceptional vertex: 2 * sum over k-subsets S of the rim with no
// two (cyclically) adjacent, of prod over maximal runs R of rim \ S of
// (m-2)(m-3)^{|R|-1}. Dense k = 0..n.
std::vector<Count> spoke_terms(Geometry rim, int n, int m, Evaluator ev = Evaluator::automatic);

// (m-2)(m-3)^{len-1}: proper colourings of a path of `len` rim vertices that
// avoid both exceptional vertices. 1 for len = 0.
Count run_colourings(int m, int len);

// Weight of a rim subset given as a bitmask over rim positions 0..n-1;
// zero when two chosen positions are adjacent.
Count spoke_weight(Geometry rim, int n, std::uint64_t mask, const std::vector<Count>& runs);

namespace serial {
std::vector<Count> enumerate_cluster_terms(Geometry geometry, int n, int m);
std::vector<Count> enumerate_spoke_terms(Geometry rim, int n, int m);
}  // namespace serial

std::vector<Count> enumerate_cluster_terms(Geometry geometry, int n, int m);
std::vector<Count> enumerate_spoke_terms(Geometry rim, int n, int m);

std::vector<Count> run_length_cluster_terms(Geometry geometry, int n, int m);
std::vector<Count> run_length_spoke_terms(Geometry rim, int n, int m);

}  // namespace qchom
