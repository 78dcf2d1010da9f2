#pragma once

#include <optional>
#include <span>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

Graph complement(const Graph& g);

/// G(S) with vertices renumbered in increasing order of their index in g.
struct Induced {
  Graph graph;
  std::vector<int> to_parent;  // induced vertex -> vertex of g
};

Induced induced_subgraph(const Graph& g, const VertexSet& s);
/// Keeps the order given in `vertices`. Duplicates or out-of-range entries
/// raise InvalidInput.
Induced induced_subgraph(const Graph& g, std::span<const int> vertices);

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

/// Two-coloring by breadth-first search; component roots go left, so an
/// edgeless graph puts everything on the left.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of G(within).
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);

/// Shortest path whose first vertex is in `from`, last vertex in `to` and
/// whose interior avoids both. Ties are broken by the lexicographically
/// smallest vertex sequence.
std::optional<Path> shortest_path_between_sets(const Graph& g, const VertexSet& from,
                                               const VertexSet& to);

/// Line graph of g; vertex i of the result is edges(g)[i].
Graph line_graph(const Graph& g);

/// Copies `copies - 1` true twins of v onto the end of the vertex list; the
/// copies are pairwise adjacent and adjacent to v and N(v).
Graph replicate(const Graph& g, int v, int copies);

/// Replicates v once into v' (index n) and deletes the edge u v'. Requires uv
/// to be an edge whose ends have no common neighbour.
Graph replicate_minus_edge(const Graph& g, int u, int v);

/// Replaces each vertex v by multiplicity[v] pairwise-adjacent copies (0
/// deletes it). `origin` receives the source vertex of every new vertex.
Graph blow_up(const Graph& g, std::span<const int> multiplicity, std::vector<int>* origin = nullptr);

}  // namespace berge
