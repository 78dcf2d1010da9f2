#pragma once

#include <optional>
#include <vector>

#include "berge/graph.hpp"
#include "berge/limits.hpp"
#include "berge/structures.hpp"

namespace berge {

// Statement evaluators for the skew-partition lemmas on minimally imperfect
// graphs. They are plain predicates, usable on any graph.

/// A vertex of `from` with no neighbour in `to`.
std::optional<int> vertex_without_neighbor_in(const Graph& g, const VertexSet& from, const VertexSet& to);
bool every_vertex_has_neighbor_in(const Graph& g, const VertexSet& from, const VertexSet& to);

/// Whether G(within) contains a clique of size omega(g).
bool contains_omega_clique(const Graph& g, const VertexSet& within, const Limits& limits = {});
/// Whether every maximum stable set of g meets s.
bool every_max_stable_set_meets(const Graph& g, const VertexSet& s, const Limits& limits = {});

/// Sorted list of k such that G(part) has a coloring with omega(g) colors
/// using exactly k colors on `target`.
std::vector<int> color_counts_on(const Graph& g, const VertexSet& part, const VertexSet& target,
                                 const Limits& limits = {});

/// True when omega-colorings of G(A u B u C) and G(A u B u D) exist with the
/// same number of colors on A.
bool same_color_count_on_a(const Graph& g, const SkewPartition& sp, const Limits& limits = {});

struct LemmaCheck {
  bool premise = false;
  bool conclusion = false;

  bool holds() const { return !premise || conclusion; }
};

/// Premise: some vertex of A has no neighbour in C. Conclusion: every vertex
/// of A has a neighbour in D and every vertex of B has a neighbour in C.
LemmaCheck neighbor_lemma(const Graph& g, const SkewPartition& sp);

}  // namespace berge
