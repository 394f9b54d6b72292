#pragma once

#include <cstdint>
#include <vector>

#include "qchom/count.hpp"
#include "qchom/polynomial.hpp"

namespace qchom {

// p: gap flanked by clusters on both sides. q: gap with a free end.
enum class GapKind { p, q };

// Layered 0/1 digraph with `depth` levels. Level 1 and the bottom level hold
// a single 0. Through level depth-2 every 0 feeds a 0 and a 1 and every 1
// feeds a 0; every node on level depth-1 feeds the bottom 0. Apart from the
// bottom node each node has exactly one parent, so a node above the bottom
// identifies a unique top-down path.
class LevelGraph {
 public:
  enum class Label : std::uint8_t { zero = 0, one = 1 };

  struct Node {
    Label label;
    std::int32_t parent;       // index on the previous level, -1 on level 1
    std::int32_t first_child;  // children are contiguous on the next level
    std::int32_t child_count;
  };

  explicit LevelGraph(std::vector<std::vector<Node>> levels) : levels_(std::move(levels)) {}

  int depth() const { return static_cast<int>(levels_.size()); }
  // Levels are 0-based here: level(0) is the top.
  const std::vector<Node>& level(int j) const { return levels_[j]; }

  std::size_t node_count() const;
  std::size_t edge_count() const;
  // Maximal top-to-bottom paths.
  std::size_t path_count() const;

 private:
  std::vector<std::vector<Node>> levels_;
};

// Deepest level graph we materialise; node count grows like Fibonacci(i).
inline constexpr int kMaxLevelGraphDepth = 32;

// Throws std::invalid_argument for i < 1 or i > kMaxLevelGraphDepth.
LevelGraph level_graph(int i);

struct PathSum {
  IntPolynomial polynomial;
  std::uint64_t summands = 0;
};

// Definitional construction: one summand per maximal path of level_graph(i),
// each the product of the node factors
//   top 0 -> (m-2), 1 -> 2, 0 after a 1 -> (m-2),
//   0 after a 0 -> (m-3), bottom 0 after a 0 -> (m-3) for p, (m-1) for q.
// i = 0 gives the constant 1.
PathSum gap_path_sum(GapKind kind, int i);
IntPolynomial gap_polynomial(GapKind kind, int i);

// x_i = (m-3) x_{i-1} + 2(m-2) x_{i-2} from the seeds x_0 = 1, x_1 = m-2,
// p_2 = (m-2)(m-3), q_2 = (m-2)(m-1).
IntPolynomial gap_polynomial_rec(GapKind kind, int i);

// All of gap_polynomial_rec(kind, 0..max_len).
std::vector<IntPolynomial> gap_polynomials_rec(GapKind kind, int max_len);

// p_len(m) and q_len(m) for len = 0..max_len at a fixed m.
struct GapValues {
  GapValues(int m, int max_len);

  const Count& p(int len) const { return p_[len]; }
  const Count& q(int len) const { return q_[len]; }
  const Count& of(GapKind kind, int len) const { return kind == GapKind::p ? p_[len] : q_[len]; }

  int m;

 private:
  std::vector<Count> p_;
  std::vector<Count> q_;
};

namespace serial {
PathSum gap_path_sum(GapKind kind, int i);
}

}  // namespace qchom
