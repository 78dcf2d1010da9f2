#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "berge/graph.hpp"
#include "berge/limits.hpp"

namespace berge {

/// Proper vertex coloring with colors 0..num_colors-1.
struct Coloring {
  std::vector<int> colors;
  int num_colors = 0;

  /// Every vertex colored within range and no edge monochromatic.
  bool is_proper(const Graph& g) const;
  /// Number of distinct colors actually present.
  int distinct_colors() const;
  /// Color classes, indexed by color.
  std::vector<VertexSet> classes() const;
};

/// Renumbers colors 0..k-1 in order of first appearance.
Coloring normalized(std::vector<int> colors);

/// Maximum clique by Bron-Kerbosch with Tomita pivoting and a size bound.
std::vector<int> max_clique(const Graph& g, const Limits& limits = {});
int clique_number(const Graph& g, const Limits& limits = {});

std::vector<int> max_stable_set(const Graph& g, const Limits& limits = {});
int stability_number(const Graph& g, const Limits& limits = {});

/// Calls visit(clique) for every clique with exactly k vertices (sorted).
void for_each_clique_of_size(const Graph& g, int k, const std::function<void(const std::vector<int>&)>& visit);

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

/// Exact chromatic number by DSATUR branch and bound seeded with a maximum
/// clique, whose vertices receive distinct colors up front.
ChromaticResult chromatic_number(const Graph& g, const Limits& limits = {});

struct PerfectionResult {
  bool perfect = true;
  /// Smallest vertex set (by size, then lexicographically) inducing a
  /// subgraph with omega != chi. Always minimally imperfect.
  std::optional<VertexSet> witness;
};

/// Checks omega(H) = chi(H) on every induced subgraph H.
PerfectionResult is_perfect(const Graph& g, const Limits& limits = {});
bool is_minimally_imperfect(const Graph& g, const Limits& limits = {});

/// |V(H)| <= alpha(H) omega(H) for every induced subgraph H.
bool lovasz_bound_holds(const Graph& g, const Limits& limits = {});

/// Clique number and chromatic number of every induced subgraph, indexed by
/// vertex mask. Requires order() <= limits.perfect.
struct SubgraphTables {
  int n = 0;
  std::vector<std::uint8_t> omega;
  std::vector<std::uint8_t> chi;
};
SubgraphTables subgraph_tables(const Graph& g, const Limits& limits = {});

}  // namespace berge
