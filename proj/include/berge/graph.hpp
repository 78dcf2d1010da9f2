#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "berge/vertex_set.hpp"

namespace berge {

using Edge = std::pair<int, int>;

/// Simple finite undirected graph on the vertices 0..n-1.
///
/// Adjacency is a symmetric, irreflexive bitset per vertex. Graphs are
/// mutable while being built; every algorithm in the library takes them by
/// const reference and never modifies its input.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int num_edges() const noexcept { return num_edges_; }

  bool adjacent(int u, int v) const { return adjacency_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return adjacency_[v]; }
  /// Neighborhood as a 64-bit mask. Requires order() <= 64.
  std::uint64_t neighbor_mask(int v) const { return adjacency_[v].mask(); }
  int degree(int v) const { return adjacency_[v].size(); }
  int max_degree() const;

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet set_of(std::initializer_list<int> vs) const { return VertexSet(order(), vs); }

  /// Throws InvalidInput on a self-loop or an out-of-range endpoint.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// Appends an isolated vertex and returns its index.
  int add_vertex();

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> adjacency_;
  int num_edges_ = 0;
};

/// Ordered vertex sequence v0..vk. For a hole the closing edge vk-v0 is
/// implied.
struct Path {
  std::vector<int> vertices;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  bool operator==(const Path&) const = default;
};

/// True when consecutive vertices are adjacent, vertices are distinct and no
/// other pair is adjacent.
bool is_chordless_path(const Graph& g, const Path& p);

/// True when p lists the vertices of a chordless cycle of length >= 4.
bool is_hole(const Graph& g, const Path& p);

}  // namespace berge
