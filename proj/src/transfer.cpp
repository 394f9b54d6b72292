#include "qchom/transfer.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qchom {

namespace {

class Matrix {
 public:
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix adjacency(const Graph& g) {
    Matrix m(g.vertex_count());
    for (const Edge& e : g.edges()) {
      m(e.u, e.v) = 1;
      m(e.v, e.u) = 1;
    }
    return m;
  }

  Count& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Count& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  Matrix operator*(const Matrix& o) const {
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const Count& x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < n_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }

  Count trace() const {
    Count t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  int n_;
  std::vector<Count> a_;
};

Count rim_count(const Graph& g, int n, Rim rim) {
  return rim == Rim::path ? linear_hom_count(g, n) : cyclic_hom_count(g, n);
}

Count hub_term(const Graph& target, int hub, int n, Rim rim) {
  const auto around = target.neighbors(hub);
  return rim_count(induced_subgraph(target, around), n, rim);
}

}  // namespace

Count linear_hom_count(const Graph& target, int n) {
  if (n < 2) throw std::invalid_argument("linear_hom_count requires n >= 2");
  const int size = target.vertex_count();
  std::vector<Count> walks(size, 1);
  std::vector<Count> next(size);
  for (int step = 1; step < n; ++step) {
    for (int v = 0; v < size; ++v) {
      Count s = 0;
      for (int u : target.neighbors(v)) s += walks[u];
      next[v] = std::move(s);
    }
    walks.swap(next);
  }
  Count total = 0;
  for (const auto& w : walks) total += w;
  return total;
}

Count cyclic_hom_count(const Graph& target, int n) {
  if (n < 3) throw std::invalid_argument("cyclic_hom_count requires n >= 3");
  Matrix result = Matrix::identity(target.vertex_count());
  Matrix base = Matrix::adjacency(target);
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result.trace();
}

namespace serial {

Count hub_conditioned_count(const Graph& target, int n, Rim rim) {
  if (n < 3) throw std::invalid_argument("hub_conditioned_count requires n >= 3");
  Count total = 0;
  for (int h = 0; h < target.vertex_count(); ++h) total += hub_term(target, h, n, rim);
  return total;
}

}  // namespace serial

Count hub_conditioned_count(const Graph& target, int n, Rim rim) {
  if (n < 3) throw std::invalid_argument("hub_conditioned_count requires n >= 3");
  const int size = target.vertex_count();
  std::vector<Count> per_hub(size);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t h = 0; h < size; ++h) per_hub[h] = hub_term(target, static_cast<int>(h), n, rim);
  Count total = 0;
  for (const auto& c : per_hub) total += c;
  return total;
}

}  // namespace qchom
