#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "berge/errors.hpp"
#include "berge/graph.hpp"
#include "berge/limits.hpp"

namespace berge::detail {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline Mask bit(int v) { return Mask{1} << v; }
inline Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

/// Per-vertex neighbour masks of g; rejects graphs above 64 vertices.
inline std::vector<Mask> masks_of(const Graph& g, const char* who) {
  if (g.order() > kMaskVertices) {
    throw ResourceLimit(std::string(who) + ": graph has " + std::to_string(g.order()) +
                        " vertices, bitmask searches support at most 64");
  }
  std::vector<Mask> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbor_mask(v);
  return adj;
}

inline void require_at_most(const Graph& g, int bound, const char* who) {
  if (g.order() > bound || g.order() > kMaskVertices) {
    throw ResourceLimit(std::string(who) + ": graph has " + std::to_string(g.order()) +
                        " vertices, limit is " + std::to_string(std::min(bound, kMaskVertices)));
  }
}

template <class F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    int v = lowest(m);
    m &= m - 1;
    f(v);
  }
}

inline std::vector<int> to_vector(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int v) { out.push_back(v); });
  return out;
}

/// Vertices of `within` reachable from `start` using only `within`.
inline Mask reach(const std::vector<Mask>& adj, Mask within, Mask start) {
  Mask seen = start & within;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= adj[v]; });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Number of connected components of G(within), stopping at `cap`.
inline int count_components(const std::vector<Mask>& adj, Mask within, int cap = 64) {
  int count = 0;
  while (within && count < cap) {
    Mask comp = reach(adj, within, bit(lowest(within)));
    within &= ~comp;
    ++count;
  }
  return count;
}

/// Complement adjacency restricted to the vertex range [0, n).
inline std::vector<Mask> complement_masks(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<Mask> co(n);
  for (int v = 0; v < n; ++v) co[v] = low_bits(n) & ~adj[v] & ~bit(v);
  return co;
}

inline VertexSet to_set(int n, Mask m) { return VertexSet::from_mask(n, m); }

}  // namespace berge::detail
