#include "qchom/graph.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qchom {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int min_n;
};

constexpr std::array<FamilyInfo, 6> kFamilyInfo{{
    {Family::complete, "complete", 3},
    {Family::quasi_complete, "quasi-complete", 3},
    {Family::path, "path", 2},
    {Family::cycle, "cycle", 4},
    {Family::broken_wheel, "broken-wheel", 3},
    {Family::wheel, "wheel", 3},
}};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilyInfo)
    if (fi.family == f) return fi;
  throw std::logic_error("unknown family");
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& fi : kFamilyInfo)
    if (fi.name == name) return fi.family;
  return std::nullopt;
}

std::string_view class_name(HomClass c) {
  switch (c) {
    case HomClass::all: return "hom";
    case HomClass::injective: return "inj";
    case HomClass::surjective: return "sur";
    case HomClass::bijective: return "bij";
  }
  throw std::logic_error("unknown class");
}

std::optional<HomClass> parse_class(std::string_view name) {
  for (HomClass c : kAllClasses)
    if (class_name(c) == name) return c;
  return std::nullopt;
}

int min_size(Family f) { return info(f).min_n; }

std::string describe(const FamilySpec& spec) {
  return std::string(family_name(spec.family)) + "(" + std::to_string(spec.n) + ")";
}

void validate(const FamilySpec& spec) {
  if (spec.family == Family::cycle && spec.n == 3)
    throw std::invalid_argument("cycle(3) is the triangle; use complete(3)");
  const int lo = min_size(spec.family);
  if (spec.n < lo)
    throw std::invalid_argument(std::string(family_name(spec.family)) + " requires n >= " +
                                std::to_string(lo) + ", got n = " + std::to_string(spec.n));
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("repeated edge");
  edges_ = std::move(edges);

  const auto n = static_cast<std::size_t>(vertex_count);
  adjacency_.assign(n, {});
  matrix_.assign(n * n, 0);
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    matrix_[e.u * n + e.v] = 1;
    matrix_[e.v * n + e.u] = 1;
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

namespace {

std::vector<Edge> clique_edges(int m) {
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) edges.push_back({i, j});
  return edges;
}

std::vector<Edge> rim(int first, int last, bool closed) {
  std::vector<Edge> edges;
  for (int i = first; i < last; ++i) edges.push_back({i, i + 1});
  if (closed) edges.push_back({last, first});
  return edges;
}

}  // namespace

Graph complete_graph(int m) {
  if (m < 1) throw std::invalid_argument("complete target requires m >= 1");
  return Graph(m, clique_edges(m));
}

Graph quasi_complete_graph(int m) {
  if (m < 2) throw std::invalid_argument("quasi-complete target requires m >= 2");
  auto edges = clique_edges(m);
  edges.erase(edges.begin());  // {0,1}
  return Graph(m, std::move(edges));
}

Graph make_family(const FamilySpec& spec) {
  validate(spec);
  const int n = spec.n;
  switch (spec.family) {
    case Family::complete: return complete_graph(n);
    case Family::quasi_complete: return quasi_complete_graph(n);
    case Family::path: return Graph(n, rim(0, n - 1, false));
    case Family::cycle: return Graph(n, rim(0, n - 1, true));
    case Family::broken_wheel:
    case Family::wheel: {
      auto edges = rim(1, n, spec.family == Family::wheel);
      for (int i = 1; i <= n; ++i) edges.push_back({0, i});
      return Graph(n + 1, std::move(edges));
    }
  }
  throw std::logic_error("unknown family");
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> position(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (position[v] != -1) throw std::invalid_argument("induced_subgraph: repeated vertex");
    position[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (position[e.u] != -1 && position[e.v] != -1) edges.push_back({position[e.u], position[e.v]});
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

}  // namespace qchom
