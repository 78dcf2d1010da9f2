#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

/// Exhaustive isomorphism test over all vertex permutations, pruned by
/// degree. Intended for graphs with at most ~10 vertices.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

/// Upper-triangle adjacency bits (row-major, i < j) of g.
std::uint64_t adjacency_code(const Graph& g);
/// Inverse of adjacency_code.
Graph from_adjacency_code(int n, std::uint64_t code);

/// Largest adjacency_code over all relabelings; equal for isomorphic graphs.
/// Requires order() <= 9.
std::uint64_t canonical_code(const Graph& g);

/// One representative of every isomorphism class of graphs on n vertices,
/// n <= 8, built by vertex extension of the classes on n - 1 vertices.
std::vector<Graph> unlabeled_graphs(int n);

}  // namespace berge
