#include "qchom/lower_vertex_set.hpp"

#include <stdexcept>

namespace qchom {

LowerVertexSet::LowerVertexSet(Geometry geometry, int ambient, std::vector<int> indices)
    : geometry_(geometry), ambient_(ambient), indices_(std::move(indices)) {
  if (ambient < 1) throw std::invalid_argument("lower vertex set needs a positive ambient length");
  for (std::size_t j = 0; j < indices_.size(); ++j) {
    if (indices_[j] < 0 || indices_[j] >= ambient)
      throw std::invalid_argument("lower vertex index out of range");
    if (j > 0 && indices_[j] <= indices_[j - 1])
      throw std::invalid_argument("lower vertex indices must be strictly increasing");
  }
}

LowerVertexSet LowerVertexSet::from_mask(Geometry geometry, int ambient, std::uint64_t mask) {
  std::vector<int> indices;
  for (int i = 0; i < ambient; ++i)
    if (mask >> i & 1u) indices.push_back(i);
  return LowerVertexSet(geometry, ambient, std::move(indices));
}

bool LowerVertexSet::valid() const {
  const int k = size();
  for (int j = 1; j < k; ++j)
    if (indices_[j] - indices_[j - 1] == 2) return false;
  if (geometry_ == Geometry::cyclic && k > 0) {
    if (k == ambient_) return ambient_ % 2 == 0;
    if (indices_.front() + ambient_ - indices_.back() == 2) return false;
  }
  return true;
}

std::vector<LowerVertexSet::Cluster> LowerVertexSet::clusters() const {
  std::vector<Cluster> runs;
  for (int idx : indices_) {
    if (!runs.empty() && runs.back().last + 1 == idx)
      runs.back().last = idx;
    else
      runs.push_back({idx, idx});
  }
  if (geometry_ == Geometry::cyclic && runs.size() > 1 && runs.front().first == 0 &&
      runs.back().last == ambient_ - 1) {
    runs.front().first = runs.back().first;
    runs.pop_back();
  }
  return runs;
}

std::vector<LowerVertexSet::Gap> LowerVertexSet::gaps() const {
  std::vector<Gap> out;
  const int k = size();
  if (k == 0) throw std::logic_error("gaps of an empty lower vertex set");

  if (geometry_ == Geometry::linear) {
    // Vertices 0..ambient; the last index i_k covers vertex i_k + 1.
    if (indices_.front() > 0) out.push_back({indices_.front(), true});
    for (int j = 1; j < k; ++j) {
      const int d = indices_[j] - indices_[j - 1];
      if (d > 2) out.push_back({d - 2, false});
    }
    const int right = ambient_ - 1 - indices_.back();
    if (right > 0) out.push_back({right, true});
    return out;
  }

  if (k == ambient_) return out;
  for (int j = 0; j < k; ++j) {
    const int next = j + 1 < k ? indices_[j + 1] : indices_.front() + ambient_;
    const int d = next - indices_[j];
    if (d > 2) out.push_back({d - 2, false});
  }
  return out;
}

Count LowerVertexSet::weight(const GapValues& values) const {
  if (!valid() || indices_.empty()) return 0;
  Count w = Count(1) << clusters().size();
  for (const Gap& g : gaps()) w *= g.boundary ? values.q(g.length) : values.p(g.length);
  return w;
}

}  // namespace qchom
