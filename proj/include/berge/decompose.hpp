#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "berge/basic.hpp"
#include "berge/graph.hpp"
#include "berge/holes.hpp"
#include "berge/limits.hpp"
#include "berge/oracle.hpp"
#include "berge/ops.hpp"
#include "berge/structures.hpp"

namespace berge {

enum class MarkerKind { path, pair };

/// One block of a 2-join: side V_i plus a marker taken from the other side,
/// either a shortest path x_1..x_L (x_1 in the other A set, x_L in the other
/// B set) or a pair {p, q}.
struct Block {
  Graph graph;
  std::vector<int> to_parent;  // block vertex -> vertex of the parent graph
  int parent_order = 0;
  int side = 1;
  VertexSet side_vertices;     // V_i in the parent
  VertexSet a, b;              // A_i, B_i in the parent
  MarkerKind marker = MarkerKind::pair;
  std::vector<int> marker_vertices;  // block-local indices, in path order
  std::optional<Parity> parity;      // edge parity of the marker path

  int path_edges() const { return static_cast<int>(marker_vertices.size()) - 1; }
};

struct BlockPair {
  Block g1, g2;

  /// Common parity when both blocks carry paths of the same parity.
  std::optional<Parity> parity() const;
  bool parities_match() const;
};

BlockPair two_join_blocks(const Graph& g, const TwoJoin& tj);

/// Colors of the side V_i of one block, with colors 0..omega-1 indexed by
/// parent vertex (-1 outside the side).
struct BlockColoring {
  int side = 1;
  std::vector<int> colors;
  int omega = 0;
  int a = 0;
  int b = 0;
  std::optional<Parity> parity;
  std::vector<int> colors_a;  // C(A_i), sorted
  std::vector<int> colors_b;  // C(B_i), sorted
  int common = 0;             // |C(A_i) & C(B_i)|
  int replicated_order = 0;   // vertices of the replicated graph that was colored

  /// The value the recipe promises for `common`, or -1 for pair markers.
  int expected_common() const;
};

/// Colors a graph with at most omega(graph) colors.
using Colorer = std::function<Coloring(const Graph&)>;
Colorer oracle_colorer(const Limits& limits = {});

/// Builds the replicated graph H for the block's marker, colors it with
/// `color`, and projects back onto the side. The counts |C(A)| = a,
/// |C(B)| = b and the parity-dependent intersection size are checked on
/// every call; a failed check raises InternalInconsistency. An imperfect
/// block (detected when H needs more than omega colors) raises InvalidInput.
BlockColoring block_coloring(const Block& block, int omega, const Colorer& color = oracle_colorer(),
                             const Limits& limits = {});

/// The replicated graph used by block_coloring, with origin[h] the block
/// vertex copied into H vertex h (the extra copy x' maps to x_L).
struct Replicated {
  Graph graph;
  std::vector<int> origin;
};
Replicated replicated_block(const Block& block, int omega, int a, int b);

struct Relabel {
  int side;
  int component;  // parent vertex naming the component, or -1 for the whole side
  int from;
  int to;
};

struct CombinedColoring {
  Coloring coloring;
  std::vector<Relabel> log;
};

/// Relabels and merges the side colorings. Path blocks of different
/// parities raise InvalidInput; a color clash raises InternalInconsistency.
CombinedColoring combine_colorings(const Graph& g, const TwoJoin& tj, const BlockPair& blocks,
                                   const BlockColoring& c1, const BlockColoring& c2, int omega);

/// G_X = G(X u {y1, y2, y3}) and G_Y = G(Y u {x1, x2, x3}), representatives
/// being the smallest members.
std::pair<Induced, Induced> six_join_blocks(const Graph& g, const SixJoin& sj);

struct BlockSummary {
  int side = 1;
  int a = 0;
  int b = 0;
  int omega = 0;
  std::optional<Parity> parity;
  int common = 0;
  int expected_common = -1;
  int replicated_order = 0;
};

enum class ColorMethod { basic, two_join, oracle };

struct DecompositionNode {
  ColorMethod method = ColorMethod::oracle;
  std::optional<BasicTag> basic;
  int order = 0;
  int omega = 0;
  std::optional<TwoJoin> two_join;
  std::vector<BlockSummary> blocks;
  std::vector<DecompositionNode> children;  // colorings of the replicated blocks

  /// Every block summary in this subtree.
  std::vector<BlockSummary> all_blocks() const;
};

struct PerfectColoring {
  Coloring coloring;
  DecompositionNode tree;
};

struct PerfectColorOptions {
  /// Check perfection with the exact oracle first (only when the graph is
  /// within limits.perfect); otherwise the input is trusted.
  bool verify_perfect = true;
  Limits limits;
};

/// Basic recognition, then 2-join decomposition, then the exact oracle.
/// The result always uses exactly omega(g) colors and is checked.
PerfectColoring perfect_color(const Graph& g, const PerfectColorOptions& options = {});

}  // namespace berge
