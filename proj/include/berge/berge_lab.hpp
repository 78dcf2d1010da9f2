#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "berge/basic.hpp"
#include "berge/graph.hpp"
#include "berge/limits.hpp"
#include "berge/structures.hpp"

namespace berge {

struct BergeResult {
  bool berge = true;
  /// An odd hole of g, or of the complement when in_complement is set.
  std::optional<Path> witness;
  bool in_complement = false;
};

BergeResult is_berge(const Graph& g, const Limits& limits = {});

/// V(g) is S plus the vertices of P; P is an odd chordless path with at
/// least three edges whose ends are complete to S, and the complement of
/// G(S) is connected. S is required to be nonempty.
struct WonderfulInstance {
  Graph g;
  VertexSet S;
  Path P;
};

/// Empty when the hypothesis holds, otherwise the first failed condition.
std::string wonderful_hypothesis_error(const WonderfulInstance& inst);

struct WonderfulOutcome {
  bool odd_complete_edges = false;  // (i)
  bool odd_complement_path = false; // (ii)
  bool path_through_s = false;      // (iii)
  int complete_edges = 0;

  bool any() const { return odd_complete_edges || odd_complement_path || path_through_s; }
};

/// Evaluates the three outcomes. A broken hypothesis or a non-Berge graph
/// raises InvalidInput; no outcome holding raises InternalInconsistency.
WonderfulOutcome wonderful_check(const WonderfulInstance& inst, const Limits& limits = {});

/// Every instance inside induced subgraphs of g: each odd chordless path of
/// length at least 3 (once per orientation-free path) with every nonempty S
/// drawn from the common neighbours of its ends. Returning true stops.
void for_each_wonderful_instance(const Graph& g, const std::function<bool(const WonderfulInstance&)>& visit);

enum class DecompositionCase {
  basic,
  skew_partition,
  homogeneous_pair,
  two_join_in_g,
  two_join_in_complement,
  none_found
};
std::string_view to_string(DecompositionCase c);

struct DecompositionReport {
  DecompositionCase kind = DecompositionCase::none_found;
  std::optional<BasicClass> basic;
  std::optional<SkewPartition> skew;
  std::optional<HomogeneousPair> pair;
  std::optional<TwoJoin> two_join;  // of g or of its complement
  /// Which of the five cases hold; filled only when every case was asked for.
  std::optional<std::array<bool, 5>> holds;
};

/// Cases are tried in the order basic, skew partition, homogeneous pair,
/// 2-join of g, 2-join of the complement. Non-Berge input raises
/// InvalidInput.
DecompositionReport decomposition_report(const Graph& g, const Limits& limits = {}, bool all_cases = false);

enum class SquareFreeCase { bipartite, line_of_bipartite, two_join, star_cutset };
std::string_view to_string(SquareFreeCase c);

/// Requires a Berge graph without 4-holes (else InvalidInput). No case
/// holding raises InternalInconsistency.
SquareFreeCase square_free_report(const Graph& g, const Limits& limits = {});

enum class OddHoleFreeCase {
  bipartite,
  line_of_bipartite,
  complement_of_line_of_bipartite,
  double_star_cutset,
  two_join
};
std::string_view to_string(OddHoleFreeCase c);

/// Requires a graph without odd holes (else InvalidInput). No case holding
/// raises InternalInconsistency.
OddHoleFreeCase odd_hole_free_report(const Graph& g);

bool has_square(const Graph& g);

/// For Berge graphs without proper wheels and stretchers in g or its
/// complement: basic or a skew partition. `applies` is false when the
/// hypothesis fails.
struct ImplicationCheck {
  bool applies = false;
  bool holds = true;
};
ImplicationCheck wheel_free_check(const Graph& g, const Limits& limits = {});

}  // namespace berge
