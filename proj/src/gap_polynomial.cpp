#include "qchom/gap_polynomial.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qchom {

std::size_t LevelGraph::node_count() const {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.size();
  return n;
}

std::size_t LevelGraph::edge_count() const {
  // One in-edge per node below the top, except the bottom node which
  // collects one edge from every node on the level above it.
  if (levels_.size() < 2) return 0;
  std::size_t e = 0;
  for (std::size_t j = 1; j + 1 < levels_.size(); ++j) e += levels_[j].size();
  return e + levels_[levels_.size() - 2].size();
}

std::size_t LevelGraph::path_count() const {
  return levels_.size() < 2 ? 1 : levels_[levels_.size() - 2].size();
}

LevelGraph level_graph(int i) {
  if (i < 1) throw std::invalid_argument("level_graph requires i >= 1");
  if (i > kMaxLevelGraphDepth)
    throw std::invalid_argument("level_graph depth limited to " + std::to_string(kMaxLevelGraphDepth));

  using Node = LevelGraph::Node;
  using Label = LevelGraph::Label;
  std::vector<std::vector<Node>> levels;
  levels.push_back({Node{Label::zero, -1, 0, 0}});
  // Branching levels 2..i-1.
  for (int j = 2; j <= i - 1; ++j) {
    auto& above = levels.back();
    std::vector<Node> next;
    next.reserve(above.size() * 2);
    for (std::size_t a = 0; a < above.size(); ++a) {
      above[a].first_child = static_cast<std::int32_t>(next.size());
      const auto parent = static_cast<std::int32_t>(a);
      next.push_back(Node{Label::zero, parent, 0, 0});
      if (above[a].label == Label::zero) next.push_back(Node{Label::one, parent, 0, 0});
      above[a].child_count = static_cast<std::int32_t>(next.size()) - above[a].first_child;
    }
    levels.push_back(std::move(next));
  }
  if (i >= 2) {
    for (auto& a : levels.back()) {
      a.first_child = 0;
      a.child_count = 1;
    }
    levels.push_back({Node{Label::zero, -1, 0, 0}});
  }
  return LevelGraph(std::move(levels));
}

namespace {

using Label = LevelGraph::Label;

// A node contributes 2 or a linear factor (m - root).
struct Factor {
  int root;  // 0 means the constant 2
};

// Factor contributed by a node on 1-based level `j` of a depth-`i` graph.
Factor node_factor(GapKind kind, int i, int j, Label label, Label previous) {
  if (j == 1) return {2};
  if (label == Label::one) return {0};
  if (previous == Label::one) return {2};
  if (j == i && kind == GapKind::q) return {1};
  return {3};
}

// Every summand is a product of at most 32 factors whose coefficient
// 1-norms are at most 4, and there are fewer than 2^22 summands at depth 32,
// so all partial sums stay below 2^86.
using Int = __int128;
using Coeffs = std::array<Int, kMaxLevelGraphDepth + 1>;

void multiply(const Coeffs& in, int degree, Factor f, Coeffs& out) {
  if (f.root == 0) {
    for (int d = 0; d <= degree; ++d) out[d] = 2 * in[d];
    return;
  }
  out[degree + 1] = in[degree];
  for (int d = degree; d >= 1; --d) out[d] = in[d - 1] - f.root * in[d];
  out[0] = -f.root * in[0];
}

int degree_after(int degree, Factor f) { return f.root == 0 ? degree : degree + 1; }

Count to_count(Int v) {
  const bool negative = v < 0;
  const unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Count c = static_cast<std::uint64_t>(u >> 64);
  c <<= 64;
  c += static_cast<std::uint64_t>(u);
  return negative ? Count(-c) : c;
}

class PathWalker {
 public:
  PathWalker(const LevelGraph& g, GapKind kind) : g_(g), kind_(kind), i_(g.depth()) {}

  struct Accumulator {
    Coeffs sum{};
    int degree = 0;
    std::uint64_t summands = 0;
  };

  // Extends the product down to node `index` on 0-based level `level`
  // (held in stack[level] with the given degree) through every path below.
  void walk(int level, int index, int degree, std::vector<Coeffs>& stack, Accumulator& out) const {
    const auto& node = g_.level(level)[index];
    if (level == i_ - 1) {
      for (int d = 0; d <= degree; ++d) out.sum[d] += stack[level][d];
      out.degree = std::max(out.degree, degree);
      ++out.summands;
      return;
    }
    if (level == i_ - 2) {
      const Factor bottom = node_factor(kind_, i_, i_, Label::zero, node.label);
      multiply(stack[level], degree, bottom, stack[level + 1]);
      walk(level + 1, 0, degree_after(degree, bottom), stack, out);
      return;
    }
    for (int c = 0; c < node.child_count; ++c) {
      const int child = node.first_child + c;
      const Factor f = node_factor(kind_, i_, level + 2, g_.level(level + 1)[child].label, node.label);
      multiply(stack[level], degree, f, stack[level + 1]);
      walk(level + 1, child, degree_after(degree, f), stack, out);
    }
  }

  // Walks every path below node `index` on `level`, starting from the
  // product of the factors on the path from the top down to that node.
  Accumulator walk_from(int level, int index) const {
    std::vector<Label> labels(level + 1);
    for (int l = level, at = index; l >= 0; --l) {
      labels[l] = g_.level(l)[at].label;
      at = g_.level(l)[at].parent;
    }
    std::vector<Coeffs> stack(i_);
    Coeffs start{};
    start[0] = 1;
    int degree = 0;
    for (int l = 0; l <= level; ++l) {
      const Factor f = node_factor(kind_, i_, l + 1, labels[l], l == 0 ? Label::zero : labels[l - 1]);
      multiply(start, degree, f, stack[level]);
      degree = degree_after(degree, f);
      start = stack[level];
    }
    Accumulator out;
    walk(level, index, degree, stack, out);
    return out;
  }

 private:
  const LevelGraph& g_;
  GapKind kind_;
  int i_;
};

PathSum to_path_sum(const Coeffs& sum, int degree, std::uint64_t summands) {
  std::vector<Count> coeffs;
  for (int d = 0; d <= degree; ++d) coeffs.push_back(to_count(sum[d]));
  return PathSum{IntPolynomial(std::move(coeffs)), summands};
}

PathSum trivial_path_sum() { return PathSum{IntPolynomial::constant(1), 1}; }

}  // namespace

namespace serial {

PathSum gap_path_sum(GapKind kind, int i) {
  if (i < 0) throw std::invalid_argument("gap polynomial index must be >= 0");
  if (i == 0) return trivial_path_sum();
  const LevelGraph g = level_graph(i);
  const auto acc = PathWalker(g, kind).walk_from(0, 0);
  return to_path_sum(acc.sum, acc.degree, acc.summands);
}

}  // namespace serial

PathSum gap_path_sum(GapKind kind, int i) {
  if (i < 0) throw std::invalid_argument("gap polynomial index must be >= 0");
  if (i <= 12) return serial::gap_path_sum(kind, i);

  const LevelGraph g = level_graph(i);
  const PathWalker walker(g, kind);

  // Split at a level well above the bottom; each node there roots an
  // independent subtree.
  constexpr int split = 10;
  const auto count = static_cast<std::int64_t>(g.level(split).size());
  std::vector<PathWalker::Accumulator> partial(count);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t f = 0; f < count; ++f) partial[f] = walker.walk_from(split, static_cast<int>(f));

  Coeffs sum{};
  int degree = 0;
  std::uint64_t summands = 0;
  for (const auto& p : partial) {
    for (int d = 0; d <= p.degree; ++d) sum[d] += p.sum[d];
    degree = std::max(degree, p.degree);
    summands += p.summands;
  }
  return to_path_sum(sum, degree, summands);
}

IntPolynomial gap_polynomial(GapKind kind, int i) { return gap_path_sum(kind, i).polynomial; }

std::vector<IntPolynomial> gap_polynomials_rec(GapKind kind, int max_len) {
  if (max_len < 0) throw std::invalid_argument("gap polynomial index must be >= 0");
  std::vector<IntPolynomial> x;
  x.reserve(max_len + 1);
  x.push_back(IntPolynomial::constant(1));
  if (max_len >= 1) x.push_back(IntPolynomial::linear(2));
  if (max_len >= 2)
    x.push_back(IntPolynomial::linear(2) * IntPolynomial::linear(kind == GapKind::p ? 3 : 1));
  const IntPolynomial a = IntPolynomial::linear(3);
  const IntPolynomial b = IntPolynomial::linear(2) * Count(2);
  for (int i = 3; i <= max_len; ++i) x.push_back(a * x[i - 1] + b * x[i - 2]);
  return x;
}

IntPolynomial gap_polynomial_rec(GapKind kind, int i) { return gap_polynomials_rec(kind, i).back(); }

GapValues::GapValues(int m_, int max_len) : m(m_) {
  const int len = std::max(max_len, 0);
  for (const auto& poly : gap_polynomials_rec(GapKind::p, len)) p_.push_back(poly(m));
  for (const auto& poly : gap_polynomials_rec(GapKind::q, len)) q_.push_back(poly(m));
}

}  // namespace qchom
