#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "berge/graph.hpp"
#include "berge/ops.hpp"
#include "berge/oracle.hpp"

namespace berge {

/// Root graph R with L(R) equal to the input on the nose: input vertex i is
/// the root edge edge_of[i].
struct LineRoot {
  Graph root;
  std::vector<Edge> edge_of;
};

/// Krausz-style search for a root graph. Components isomorphic to K3 get the
/// claw as their root so that a bipartite root is found whenever one exists.
std::optional<LineRoot> line_graph_root(const Graph& g);

/// Checks that edge_of maps the vertices of g bijectively onto the edges of
/// root and that adjacency in g is exactly edge adjacency in root.
bool is_line_root_of(const Graph& g, const LineRoot& r);

enum class BasicTag { bipartite, complement_of_bipartite, line_of_bipartite, complement_of_line_of_bipartite, not_basic };

std::string_view to_string(BasicTag tag);

struct BasicClass {
  BasicTag tag = BasicTag::not_basic;
  /// Bipartition of g (bipartite) or of its complement.
  std::optional<Bipartition> bipartition;
  /// Bipartite root of g (line_of_bipartite) or of its complement.
  std::optional<LineRoot> root;
};

struct BasicMembership {
  bool bipartite = false;
  bool complement_of_bipartite = false;
  bool line_of_bipartite = false;
  bool complement_of_line_of_bipartite = false;

  bool any() const { return bipartite || complement_of_bipartite || line_of_bipartite || complement_of_line_of_bipartite; }
};

/// First matching class in the order bipartite, complement of bipartite,
/// line graph of bipartite, complement of that.
BasicClass recognize_basic(const Graph& g);
BasicMembership basic_membership(const Graph& g);

/// Re-checks a recognition witness against g.
bool witness_is_valid(const Graph& g, const BasicClass& c);

struct EdgeColoring {
  std::vector<Edge> edges;   // (u, v) with u < v, in Graph::edges() order
  std::vector<int> colors;   // parallel to edges
  int num_colors = 0;

  bool is_proper() const;
  int color_of(int u, int v) const;
};

/// Maximum matching of a bipartite graph: mate[v] or -1.
std::vector<int> bipartite_matching(const Graph& g, const Bipartition& sides);
/// Minimum vertex cover from a maximum matching (Konig).
VertexSet konig_vertex_cover(const Graph& g, const Bipartition& sides, const std::vector<int>& mate);

/// Proper edge coloring of a bipartite graph with exactly max_degree colors,
/// built by swapping two-colored alternating paths. Non-bipartite input
/// raises InvalidInput.
EdgeColoring konig_edge_coloring(const Graph& g);

/// Colors g with exactly omega(g) colors from the class witness: sides for
/// bipartite graphs, a matching-based clique cover for their complements,
/// Konig edge colors of the root for line graphs, and a Konig vertex cover of
/// the root for complements of line graphs.
Coloring color_basic(const Graph& g, const BasicClass& c);

}  // namespace berge
