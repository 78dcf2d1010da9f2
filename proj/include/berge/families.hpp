#pragma once

#include "berge/graph.hpp"

namespace berge::families {

Graph cycle(int n);
Graph antihole(int n);
Graph path(int n);
Graph complete(int n);
Graph empty(int n);
Graph complete_bipartite(int left, int right);
/// Hub 0 adjacent to every vertex of the cycle 1..n.
Graph wheel(int rim);
/// Disjoint union; vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace berge::families
