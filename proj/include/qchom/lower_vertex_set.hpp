#pragma once

#include <vector>

#include "qchom/count.hpp"
#include "qchom/gap_polynomial.hpp"

namespace qchom {

enum class Geometry { linear, cyclic };

// Lower endpoints i_1 < ... < i_k of the source edges sent onto the
// exceptional pair.
//
// linear: a path on `ambient + 1` vertices, edge i = {i, i+1}, 0 <= i < ambient.
// cyclic: a cycle on `ambient` vertices, edge i = {i, i+1 mod ambient}.
//
// A cluster is a maximal run of consecutive indices together with the vertex
// following its last index (runs meeting across the wrap merge). Its image
// alternates between the two exceptional vertices. Vertices outside every
// cluster form gaps; a gap touching only one cluster (a path end) is a
// boundary gap, every other gap is internal.
class LowerVertexSet {
 public:
  struct Cluster {
    int first;  // first index of the run
    int last;   // last index; the cluster's vertices are first..last+1
  };

  struct Gap {
    int length;
    bool boundary;
  };

  // Throws std::invalid_argument unless indices are strictly increasing and
  // within [0, ambient).
  LowerVertexSet(Geometry geometry, int ambient, std::vector<int> indices);

  // Builds from a bitmask over positions 0..ambient-1.
  static LowerVertexSet from_mask(Geometry geometry, int ambient, std::uint64_t mask);

  Geometry geometry() const { return geometry_; }
  int ambient() const { return ambient_; }
  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }

  // No two (cyclically) consecutive indices differ by exactly 2; a full
  // cyclic set additionally needs an even cycle.
  bool valid() const;

  // Both require valid() and a non-empty set.
  std::vector<Cluster> clusters() const;
  std::vector<Gap> gaps() const;

  // 2^{#clusters} * prod internal p_len(m) * prod boundary q_len(m).
  // Zero for invalid sets. `values` must cover lengths up to ambient.
  Count weight(const GapValues& values) const;

 private:
  Geometry geometry_;
  int ambient_;
  std::vector<int> indices_;
};

}  // namespace qchom
