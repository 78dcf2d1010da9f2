#include "berge/berge_lab.hpp"

#include <functional>
#include <sstream>

#include "berge/errors.hpp"
#include "berge/graph6.hpp"
#include "berge/holes.hpp"
#include "berge/ops.hpp"
#include "berge/wheels.hpp"
#include "bits.hpp"

namespace berge {

using detail::Mask;
using detail::bit;
using detail::popcount;

BergeResult is_berge(const Graph& g, const Limits& limits) {
  detail::require_at_most(g, limits.berge, "is_berge");
  BergeResult r;
  if (auto hole = find_hole(g, Parity::odd, 5)) {
    r.berge = false;
    r.witness = std::move(hole);
    return r;
  }
  if (auto hole = find_hole(complement(g), Parity::odd, 5)) {
    r.berge = false;
    r.witness = std::move(hole);
    r.in_complement = true;
  }
  return r;
}

// --- the Wonderful Lemma ---------------------------------------------------

std::string wonderful_hypothesis_error(const WonderfulInstance& inst) {
  const Graph& g = inst.g;
  const auto& p = inst.P.vertices;
  if (inst.S.universe() != g.order()) return "S has the wrong universe";
  if (inst.S.empty()) return "S is empty";
  if (p.size() < 4) return "P has fewer than three edges";
  if (inst.P.length() % 2 == 0) return "P has an even number of edges";
  if (!is_chordless_path(g, inst.P)) return "P is not a chordless path";
  VertexSet on_path(g.order(), std::span<const int>(p));
  if (on_path.intersects(inst.S) || (on_path | inst.S) != g.vertices()) return "S and V(P) do not partition V";
  for (int s : inst.S) {
    if (!g.adjacent(s, p.front()) || !g.adjacent(s, p.back())) return "an end of P misses a vertex of S";
  }
  const auto co = complement(induced_subgraph(g, inst.S).graph);
  if (!is_connected(co)) return "the complement of G(S) is disconnected";
  return {};
}

namespace {

/// Whether some chordless u-v path of g has an odd number of edges.
bool has_odd_chordless_path(const Graph& g, int u, int v) {
  const auto adj = detail::masks_of(g, "has_odd_chordless_path");
  std::function<bool(int, Mask, int)> grow = [&](int last, Mask on_path, int edges) {
    if (adj[last] & bit(v)) return (edges + 1) % 2 == 1;
    Mask next = adj[last] & ~on_path & ~bit(v);
    while (next) {
      const int w = detail::lowest(next);
      next &= next - 1;
      if (adj[w] & (on_path & ~bit(last))) continue;
      if (grow(w, on_path | bit(w), edges + 1)) return true;
    }
    return false;
  };
  return grow(u, bit(u), 0);
}

bool induces_path(const Graph& g, const VertexSet& s) {
  const auto sub = induced_subgraph(g, s);
  const int m = sub.graph.order();
  if (m == 0 || sub.graph.num_edges() != m - 1 || !is_connected(sub.graph)) return false;
  return sub.graph.max_degree() <= 2;
}

std::string dump(const WonderfulInstance& inst) {
  std::ostringstream os;
  os << "[graph6 " << to_graph6(inst.g) << ", S " << inst.S.to_string() << ", P";
  for (int v : inst.P.vertices) os << ' ' << v;
  os << ']';
  return os.str();
}

}  // namespace

WonderfulOutcome wonderful_check(const WonderfulInstance& inst, const Limits& limits) {
  if (auto err = wonderful_hypothesis_error(inst); !err.empty()) throw InvalidInput("wonderful_check: " + err);
  if (!is_berge(inst.g, limits).berge) throw InvalidInput("wonderful_check: graph is not Berge");
  const Graph& g = inst.g;
  const auto& p = inst.P.vertices;
  const int len = inst.P.length();
  WonderfulOutcome out;

  auto complete_to_s = [&](int x) { return inst.S.is_subset_of(g.neighbors(x)); };
  for (int k = 0; k < len; ++k) {
    if (complete_to_s(p[k]) && complete_to_s(p[k + 1])) ++out.complete_edges;
  }
  out.odd_complete_edges = out.complete_edges % 2 == 1;

  if (len == 3) {
    VertexSet s = inst.S;
    s.insert(p[1]);
    s.insert(p[2]);
    const auto sub = induced_subgraph(g, s);
    const Graph co = complement(sub.graph);
    int u = -1;
    int v = -1;
    for (int i = 0; i < co.order(); ++i) {
      if (sub.to_parent[i] == p[1]) u = i;
      if (sub.to_parent[i] == p[2]) v = i;
    }
    out.odd_complement_path = has_odd_chordless_path(co, u, v);
  } else {
    VertexSet inner(g.order(), std::span<const int>(p.data() + 1, p.size() - 2));
    for (int x : inst.S) {
      for (int y = inst.S.next(x + 1); y != -1 && !out.path_through_s; y = inst.S.next(y + 1)) {
        if (g.adjacent(x, y)) continue;
        VertexSet t = inner;
        t.insert(x);
        t.insert(y);
        out.path_through_s = induces_path(g, t);
      }
      if (out.path_through_s) break;
    }
  }
  if (!out.any()) throw InternalInconsistency("wonderful_check: no outcome holds " + dump(inst));
  return out;
}

void for_each_wonderful_instance(const Graph& g, const std::function<bool(const WonderfulInstance&)>& visit) {
  const int n = g.order();
  const auto adj = detail::masks_of(g, "for_each_wonderful_instance");
  const auto co = detail::complement_masks(adj);
  std::vector<int> path;
  bool stop = false;

  auto emit = [&](Mask on_path) {
    const int u = path.front();
    const int v = path.back();
    const Mask common = adj[u] & adj[v] & ~on_path;
    // Nonempty subsets of the common neighbourhood whose complement is connected.
    for (Mask s = common; s && !stop; s = (s - 1) & common) {
      if (detail::reach(co, s, bit(detail::lowest(s))) != s) continue;
      std::vector<int> order = path;
      detail::for_each_bit(s, [&](int x) { order.push_back(x); });
      const auto sub = induced_subgraph(g, std::span<const int>(order));
      WonderfulInstance inst{sub.graph, VertexSet(sub.graph.order()), Path{}};
      for (std::size_t i = 0; i < path.size(); ++i) inst.P.vertices.push_back(static_cast<int>(i));
      for (std::size_t i = path.size(); i < order.size(); ++i) inst.S.insert(static_cast<int>(i));
      stop = visit(inst);
    }
  };

  std::function<void(Mask)> grow = [&](Mask on_path) {
    if (stop) return;
    if (path.size() >= 4 && path.size() % 2 == 0 && path.front() < path.back()) emit(on_path);
    const int last = path.back();
    Mask next = adj[last] & ~on_path;
    while (next && !stop) {
      const int w = detail::lowest(next);
      next &= next - 1;
      if (adj[w] & (on_path & ~bit(last))) continue;
      path.push_back(w);
      grow(on_path | bit(w));
      path.pop_back();
    }
  };
  for (int u = 0; u < n && !stop; ++u) {
    path = {u};
    grow(bit(u));
  }
}

// --- decomposition reports ------------------------------------------------

std::string_view to_string(DecompositionCase c) {
  switch (c) {
    case DecompositionCase::basic:
      return "basic";
    case DecompositionCase::skew_partition:
      return "skew_partition";
    case DecompositionCase::homogeneous_pair:
      return "homogeneous_pair";
    case DecompositionCase::two_join_in_g:
      return "two_join_in_g";
    case DecompositionCase::two_join_in_complement:
      return "two_join_in_complement";
    case DecompositionCase::none_found:
      return "none_found";
  }
  return "unknown";
}

DecompositionReport decomposition_report(const Graph& g, const Limits& limits, bool all_cases) {
  if (!is_berge(g, limits).berge) throw InvalidInput("decomposition_report: graph is not Berge");
  DecompositionReport r;
  std::array<bool, 5> holds{};
  auto settle = [&](DecompositionCase c) {
    holds[static_cast<int>(c)] = true;
    if (r.kind == DecompositionCase::none_found) r.kind = c;
  };
  auto done = [&] { return !all_cases && r.kind != DecompositionCase::none_found; };

  if (auto b = recognize_basic(g); b.tag != BasicTag::not_basic) {
    r.basic = std::move(b);
    settle(DecompositionCase::basic);
  }
  if (!done()) {
    if (auto sp = find_skew_partition(g, limits)) {
      if (!r.skew) r.skew = std::move(sp);
      settle(DecompositionCase::skew_partition);
    }
  }
  if (!done()) {
    if (auto hp = find_homogeneous_pair(g, limits)) {
      r.pair = std::move(hp);
      settle(DecompositionCase::homogeneous_pair);
    }
  }
  if (!done()) {
    if (auto tj = find_two_join(g)) {
      r.two_join = std::move(tj);
      settle(DecompositionCase::two_join_in_g);
    }
  }
  if (!done()) {
    if (auto tj = find_two_join(complement(g))) {
      if (!r.two_join) r.two_join = std::move(tj);
      settle(DecompositionCase::two_join_in_complement);
    }
  }
  if (all_cases) r.holds = holds;
  return r;
}

std::string_view to_string(SquareFreeCase c) {
  switch (c) {
    case SquareFreeCase::bipartite:
      return "bipartite";
    case SquareFreeCase::line_of_bipartite:
      return "line_of_bipartite";
    case SquareFreeCase::two_join:
      return "two_join";
    case SquareFreeCase::star_cutset:
      return "star_cutset";
  }
  return "unknown";
}

std::string_view to_string(OddHoleFreeCase c) {
  switch (c) {
    case OddHoleFreeCase::bipartite:
      return "bipartite";
    case OddHoleFreeCase::line_of_bipartite:
      return "line_of_bipartite";
    case OddHoleFreeCase::complement_of_line_of_bipartite:
      return "complement_of_line_of_bipartite";
    case OddHoleFreeCase::double_star_cutset:
      return "double_star_cutset";
    case OddHoleFreeCase::two_join:
      return "two_join";
  }
  return "unknown";
}

bool has_square(const Graph& g) {
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      const VertexSet common = g.neighbors(x) & g.neighbors(y);
      for (int a : common) {
        if ((common - g.neighbors(a)).next(a + 1) != -1) return true;
      }
    }
  }
  return false;
}

namespace {

bool line_of_bipartite(const Graph& g) {
  auto r = line_graph_root(g);
  return r && is_bipartite(r->root);
}

}  // namespace

SquareFreeCase square_free_report(const Graph& g, const Limits& limits) {
  if (!is_berge(g, limits).berge) throw InvalidInput("square_free_report: graph is not Berge");
  if (has_square(g)) throw InvalidInput("square_free_report: graph has a 4-hole");
  if (is_bipartite(g)) return SquareFreeCase::bipartite;
  if (line_of_bipartite(g)) return SquareFreeCase::line_of_bipartite;
  if (find_two_join(g)) return SquareFreeCase::two_join;
  if (find_star_cutset(g)) return SquareFreeCase::star_cutset;
  throw InternalInconsistency("square_free_report: no case holds [graph6 " + to_graph6(g) + "]");
}

OddHoleFreeCase odd_hole_free_report(const Graph& g) {
  if (find_hole(g, Parity::odd, 5)) throw InvalidInput("odd_hole_free_report: graph has an odd hole");
  if (is_bipartite(g)) return OddHoleFreeCase::bipartite;
  if (line_of_bipartite(g)) return OddHoleFreeCase::line_of_bipartite;
  if (line_of_bipartite(complement(g))) return OddHoleFreeCase::complement_of_line_of_bipartite;
  if (find_double_star_cutset(g)) return OddHoleFreeCase::double_star_cutset;
  if (find_two_join(g)) return OddHoleFreeCase::two_join;
  throw InternalInconsistency("odd_hole_free_report: no case holds [graph6 " + to_graph6(g) + "]");
}

ImplicationCheck wheel_free_check(const Graph& g, const Limits& limits) {
  ImplicationCheck out;
  if (!is_berge(g, limits).berge) return out;
  const Graph co = complement(g);
  for (const Graph* h : {&g, &co}) {
    if (!find_wheels(*h, {WheelKind::proper}, limits).empty() || find_stretcher(*h, limits)) return out;
  }
  out.applies = true;
  out.holds = recognize_basic(g).tag != BasicTag::not_basic || find_skew_partition(g, limits).has_value();
  return out;
}

}  // namespace berge
