#include "berge/families.hpp"

#include "berge/errors.hpp"
#include "berge/ops.hpp"

namespace berge::families {

Graph cycle(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph antihole(int n) { return complement(cycle(n)); }

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph empty(int n) { return Graph(n); }

Graph complete_bipartite(int left, int right) {
  Graph g(left + right);
  for (int i = 0; i < left; ++i) {
    for (int j = 0; j < right; ++j) g.add_edge(i, left + j);
  }
  return g;
}

Graph wheel(int rim) {
  Graph g(rim + 1);
  for (int i = 0; i < rim; ++i) {
    g.add_edge(0, 1 + i);
    g.add_edge(1 + i, 1 + (i + 1) % rim);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

}  // namespace berge::families
