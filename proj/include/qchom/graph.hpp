#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qchom {

enum class Family { complete, quasi_complete, path, cycle, broken_wheel, wheel };

enum class HomClass { all, injective, surjective, bijective };

inline constexpr Family kAllFamilies[] = {Family::complete, Family::quasi_complete,
                                          Family::path,     Family::cycle,
                                          Family::broken_wheel, Family::wheel};

inline constexpr HomClass kAllClasses[] = {HomClass::all, HomClass::injective,
                                           HomClass::surjective, HomClass::bijective};

// Command-line spelling: "complete", "quasi-complete", "path", "cycle",
// "broken-wheel", "wheel".
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// "hom", "inj", "sur", "bij".
std::string_view class_name(HomClass c);
std::optional<HomClass> parse_class(std::string_view name);

// Smallest admissible size parameter for the family.
int min_size(Family f);

struct FamilySpec {
  Family family;
  int n;

  auto operator<=>(const FamilySpec&) const = default;
};

std::string describe(const FamilySpec& spec);

// Throws std::invalid_argument naming the valid range when `spec.n` is out of
// range. A cycle on three vertices is rejected in favour of complete(3).
void validate(const FamilySpec& spec);

struct Edge {
  int u;
  int v;

  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..vertex_count-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Edges may be given in either orientation. Self-loops, out-of-range
  // endpoints and repeated pairs throw std::invalid_argument.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Sorted, each with u < v.
  std::span<const Edge> edges() const { return edges_; }

  bool adjacent(int u, int v) const {
    return matrix_[static_cast<std::size_t>(u) * vertex_count_ + v] != 0;
  }

  // Ascending vertex order.
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }

  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  bool operator==(const Graph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint8_t> matrix_;
};

// Canonical labelling:
//   complete        all pairs on 0..n-1
//   quasi_complete  complete minus {0,1}; 0 and 1 are the exceptional pair
//   path            {i,i+1} for 0 <= i <= n-2
//   cycle           path plus {n-1,0}
//   broken_wheel    hub 0 joined to 1..n, rim path {i,i+1} for 1 <= i <= n-1
//   wheel           broken_wheel plus {n,1}
Graph make_family(const FamilySpec& spec);

// Targets. Unlike make_family these accept any m >= 1 (m >= 2 for the
// quasi-complete graph) so that recursive arguments can drop to small m.
Graph complete_graph(int m);
Graph quasi_complete_graph(int m);

// Subgraph induced on `vertices`, relabelled 0..k-1 in list order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

}  // namespace qchom
