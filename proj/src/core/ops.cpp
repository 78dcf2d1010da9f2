#include "berge/ops.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "berge/errors.hpp"

namespace berge {

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph co(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) co.add_edge(u, v);
    }
  }
  return co;
}

Induced induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    // Accept sets over a smaller universe as long as every element is a vertex.
    for (int v : s) {
      if (v >= g.order()) throw InvalidInput("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    }
  }
  const auto vs = s.elements();
  return induced_subgraph(g, std::span<const int>(vs));
}

Induced induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  VertexSet seen(g.order());
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) throw InvalidInput("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    if (seen.contains(v)) throw InvalidInput("induced_subgraph: duplicate vertex " + std::to_string(v));
    seen.insert(v);
  }
  Induced out{Graph(k), std::vector<int>(vertices.begin(), vertices.end())};
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(vertices[i], vertices[j])) out.graph.add_edge(i, j);
    }
  }
  return out;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition bp{VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v) (side[v] == 0 ? bp.left : bp.right).insert(v);
  return bp;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  const int n = g.order();
  std::vector<VertexSet> comps;
  VertexSet unseen(n);
  for (int v : within) unseen.insert(v);
  std::vector<int> stack;
  for (int root = unseen.first(); root != -1; root = unseen.first()) {
    VertexSet comp(n);
    comp.insert(root);
    unseen.erase(root);
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (unseen.contains(w)) {
          unseen.erase(w);
          comp.insert(w);
          stack.push_back(w);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<Path> shortest_path_between_sets(const Graph& g, const VertexSet& from, const VertexSet& to) {
  if (from.empty() || to.empty()) throw InvalidInput("shortest_path_between_sets: empty endpoint set");
  if (from.intersects(to)) throw InvalidInput("shortest_path_between_sets: endpoint sets overlap");
  const int n = g.order();
  for (int v : from) {
    if (v >= n) throw InvalidInput("shortest_path_between_sets: vertex out of range");
  }
  for (int v : to) {
    if (v >= n) throw InvalidInput("shortest_path_between_sets: vertex out of range");
  }

  // Distance to `to` through interior vertices only.
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(n, kInf);
  std::deque<int> queue;
  for (int t : to) {
    dist[t] = 0;
    queue.push_back(t);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] != kInf || from.contains(w) || to.contains(w)) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }

  int best_start = -1;
  int best = kInf;
  for (int s : from) {
    for (int w : g.neighbors(s)) {
      if (dist[w] != kInf && dist[w] + 1 < best) {
        best = dist[w] + 1;
        best_start = s;
      }
    }
  }
  if (best_start == -1) return std::nullopt;

  Path p;
  p.vertices.push_back(best_start);
  int remaining = best;
  int current = best_start;
  while (remaining > 0) {
    int step = -1;
    for (int w : g.neighbors(current)) {
      if (dist[w] == remaining - 1 && !from.contains(w)) {
        step = w;
        break;
      }
    }
    p.vertices.push_back(step);
    current = step;
    --remaining;
  }
  return p;
}

Graph line_graph(const Graph& g) {
  const auto es = g.edges();
  const int m = static_cast<int>(es.size());
  Graph lg(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) lg.add_edge(i, j);
    }
  }
  return lg;
}

Graph replicate(const Graph& g, int v, int copies) {
  if (v < 0 || v >= g.order()) throw InvalidInput("replicate: vertex out of range");
  if (copies < 1) throw InvalidInput("replicate: copy count must be at least 1");
  const int n = g.order();
  Graph out(n + copies - 1);
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  for (int c = n; c < n + copies - 1; ++c) {
    out.add_edge(c, v);
    for (int w : g.neighbors(v)) out.add_edge(c, w);
    for (int d = n; d < c; ++d) out.add_edge(c, d);
  }
  return out;
}

Graph replicate_minus_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
    throw InvalidInput("replicate_minus_edge: uv must be an edge");
  }
  if (g.neighbors(u).intersects(g.neighbors(v))) {
    throw InvalidInput("replicate_minus_edge: u and v have a common neighbour");
  }
  Graph out = replicate(g, v, 2);
  out.remove_edge(u, g.order());
  return out;
}

Graph blow_up(const Graph& g, std::span<const int> multiplicity, std::vector<int>* origin) {
  if (static_cast<int>(multiplicity.size()) != g.order()) throw InvalidInput("blow_up: multiplicity size mismatch");
  std::vector<int> src;
  for (int v = 0; v < g.order(); ++v) {
    if (multiplicity[v] < 0) throw InvalidInput("blow_up: negative multiplicity");
    for (int c = 0; c < multiplicity[v]; ++c) src.push_back(v);
  }
  const int m = static_cast<int>(src.size());
  Graph out(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (src[i] == src[j] || g.adjacent(src[i], src[j])) out.add_edge(i, j);
    }
  }
  if (origin) *origin = std::move(src);
  return out;
}

}  // namespace berge
