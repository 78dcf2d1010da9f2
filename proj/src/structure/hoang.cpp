#include "berge/hoang.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "berge/oracle.hpp"
#include "berge/ops.hpp"
#include "bits.hpp"

namespace berge {

std::optional<int> vertex_without_neighbor_in(const Graph& g, const VertexSet& from, const VertexSet& to) {
  for (int v : from) {
    if (!g.neighbors(v).intersects(to)) return v;
  }
  return std::nullopt;
}

bool every_vertex_has_neighbor_in(const Graph& g, const VertexSet& from, const VertexSet& to) {
  return !vertex_without_neighbor_in(g, from, to).has_value();
}

bool contains_omega_clique(const Graph& g, const VertexSet& within, const Limits& limits) {
  const auto sub = induced_subgraph(g, within);
  return clique_number(sub.graph, limits) == clique_number(g, limits);
}

bool every_max_stable_set_meets(const Graph& g, const VertexSet& s, const Limits& limits) {
  // A maximum stable set avoiding s exists iff alpha(G - s) = alpha(G).
  const auto rest = induced_subgraph(g, g.vertices() - s);
  return stability_number(rest.graph, limits) < stability_number(g, limits);
}

std::vector<int> color_counts_on(const Graph& g, const VertexSet& part, const VertexSet& target,
                                 const Limits& limits) {
  const int omega = clique_number(g, limits);
  const auto sub = induced_subgraph(g, part);
  detail::require_at_most(sub.graph, limits.perfect, "color_counts_on");
  const int n = sub.graph.order();
  std::vector<int> colors(n, -1);
  std::set<int> counts;
  std::function<void(int, int)> extend = [&](int v, int used) {
    if (v == n) {
      std::set<int> on_target;
      for (int u = 0; u < n; ++u) {
        if (target.contains(sub.to_parent[u])) on_target.insert(colors[u]);
      }
      counts.insert(static_cast<int>(on_target.size()));
      return;
    }
    for (int c = 0; c < std::min(used + 1, omega); ++c) {
      bool ok = true;
      for (int w : sub.graph.neighbors(v)) {
        if (w < v && colors[w] == c) ok = false;
      }
      if (!ok) continue;
      colors[v] = c;
      extend(v + 1, std::max(used, c + 1));
    }
    colors[v] = -1;
  };
  extend(0, 0);
  return {counts.begin(), counts.end()};
}

bool same_color_count_on_a(const Graph& g, const SkewPartition& sp, const Limits& limits) {
  const auto first = color_counts_on(g, sp.A | sp.B | sp.C, sp.A, limits);
  const auto second = color_counts_on(g, sp.A | sp.B | sp.D, sp.A, limits);
  for (int k : first) {
    if (std::find(second.begin(), second.end(), k) != second.end()) return true;
  }
  return false;
}

LemmaCheck neighbor_lemma(const Graph& g, const SkewPartition& sp) {
  LemmaCheck out;
  out.premise = vertex_without_neighbor_in(g, sp.A, sp.C).has_value();
  out.conclusion = every_vertex_has_neighbor_in(g, sp.A, sp.D) && every_vertex_has_neighbor_in(g, sp.B, sp.C);
  return out;
}

}  // namespace berge
