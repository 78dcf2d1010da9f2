#include "berge/graph.hpp"

#include <algorithm>
#include <string>

#include "berge/errors.hpp"

namespace berge {

Graph::Graph(int n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  adjacency_.assign(n, VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw InvalidInput("vertex " + std::to_string(v) + " outside [0, " + std::to_string(order()) + ")");
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  if (adjacency_[u].contains(v)) return;
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  ++num_edges_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!adjacency_[u].contains(v)) return;
  adjacency_[u].erase(v);
  adjacency_[v].erase(u);
  --num_edges_;
}

int Graph::add_vertex() {
  const int n = order() + 1;
  std::vector<VertexSet> grown(n, VertexSet(n));
  for (int v = 0; v + 1 < n; ++v) {
    for (int w : adjacency_[v]) grown[v].insert(w);
  }
  adjacency_ = std::move(grown);
  return n - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < order(); ++u) {
    for (int v = adjacency_[u].next(u + 1); v != -1; v = adjacency_[u].next(v + 1)) out.emplace_back(u, v);
  }
  return out;
}

bool is_chordless_path(const Graph& g, const Path& p) {
  const auto& vs = p.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) return false;
      const bool should = (j == i + 1);
      if (g.adjacent(vs[i], vs[j]) != should) return false;
    }
  }
  return true;
}

bool is_hole(const Graph& g, const Path& p) {
  const auto& vs = p.vertices;
  const std::size_t k = vs.size();
  if (k < 4) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (vs[i] < 0 || vs[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (vs[i] == vs[j]) return false;
      const bool should = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(vs[i], vs[j]) != should) return false;
    }
  }
  return true;
}

}  // namespace berge
