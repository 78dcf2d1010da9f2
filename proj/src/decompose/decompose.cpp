#include "berge/decompose.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "berge/errors.hpp"
#include "berge/graph6.hpp"

namespace berge {

namespace {

Limits wide(Limits limits) {
  limits.clique = kMaskVertices;
  return limits;
}

int clique_of(const Graph& g, const VertexSet& s, const Limits& limits) {
  if (s.empty()) return 0;
  return clique_number(induced_subgraph(g, s).graph, wide(limits));
}

Block make_block(const Graph& g, int side, const VertexSet& v, const VertexSet& a, const VertexSet& b,
                 const VertexSet& other, const VertexSet& other_a, const VertexSet& other_b) {
  const auto sub = induced_subgraph(g, other);
  const int m = sub.graph.order();
  VertexSet local_a(m);
  VertexSet local_b(m);
  for (int i = 0; i < m; ++i) {
    if (other_a.contains(sub.to_parent[i])) local_a.insert(i);
    if (other_b.contains(sub.to_parent[i])) local_b.insert(i);
  }

  Block block;
  block.side = side;
  block.parent_order = g.order();
  block.side_vertices = v;
  block.a = a;
  block.b = b;
  std::vector<int> marker;
  if (auto path = shortest_path_between_sets(sub.graph, local_a, local_b)) {
    block.marker = MarkerKind::path;
    for (int x : path->vertices) marker.push_back(sub.to_parent[x]);
    block.parity = (path->length() % 2 == 1) ? Parity::odd : Parity::even;
  } else {
    block.marker = MarkerKind::pair;
    marker = {other_a.first(), other_b.first()};
  }
  std::vector<int> vertices = v.elements();
  const int base = static_cast<int>(vertices.size());
  vertices.insert(vertices.end(), marker.begin(), marker.end());
  auto ind = induced_subgraph(g, std::span<const int>(vertices));
  block.graph = std::move(ind.graph);
  block.to_parent = std::move(ind.to_parent);
  for (std::size_t i = 0; i < marker.size(); ++i) block.marker_vertices.push_back(base + static_cast<int>(i));
  return block;
}

VertexSet local_set(const Block& block, const VertexSet& parent_set) {
  VertexSet out(block.graph.order());
  for (int i = 0; i < block.graph.order(); ++i) {
    if (parent_set.contains(block.to_parent[i])) out.insert(i);
  }
  return out;
}

std::string describe(const Block& block, int omega, int a, int b) {
  std::ostringstream os;
  os << "side " << block.side << ", omega " << omega << ", a " << a << ", b " << b << ", marker "
     << (block.marker == MarkerKind::path ? "path of " + std::to_string(block.path_edges()) + " edges" : "pair")
     << " [block graph6 " << to_graph6(block.graph) << "]";
  return os.str();
}

}  // namespace

std::optional<Parity> BlockPair::parity() const {
  if (g1.parity && g2.parity && *g1.parity == *g2.parity) return g1.parity;
  return std::nullopt;
}

bool BlockPair::parities_match() const { return !(g1.parity && g2.parity) || *g1.parity == *g2.parity; }

BlockPair two_join_blocks(const Graph& g, const TwoJoin& tj) {
  if (!is_two_join(g, tj)) throw InvalidInput("two_join_blocks: not a 2-join of the graph");
  return BlockPair{make_block(g, 1, tj.V1, tj.A1, tj.B1, tj.V2, tj.A2, tj.B2),
                   make_block(g, 2, tj.V2, tj.A2, tj.B2, tj.V1, tj.A1, tj.B1)};
}

int BlockColoring::expected_common() const {
  if (!parity) return -1;
  if (*parity == Parity::odd) return std::max(0, a + b - omega);
  return std::min(a, b);
}

Colorer oracle_colorer(const Limits& limits) {
  return [limits](const Graph& h) { return chromatic_number(h, wide(limits)).coloring; };
}

Replicated replicated_block(const Block& block, int omega, int a, int b) {
  if (a > omega || b > omega) throw InvalidInput("replicated_block: omega is smaller than omega(A) or omega(B)");
  Graph base = block.graph;
  std::vector<int> mult(block.graph.order(), 1);
  const auto& xs = block.marker_vertices;
  const int len = static_cast<int>(xs.size());
  int extra = -1;  // x'_L in the odd case

  if (block.marker == MarkerKind::pair) {
    mult[xs[0]] = omega - a;
    mult[xs[1]] = omega - b;
  } else if (block.parity == Parity::odd) {
    // x_1 .. x_{2k}: split x_{2k} into x_{2k} and x'_{2k}, the copy missing
    // the edge to x_{2k-1}.
    base = replicate_minus_edge(block.graph, xs[len - 2], xs[len - 1]);
    extra = base.order() - 1;
    mult.push_back(0);
    for (int j = 1; j < len; ++j) mult[xs[j - 1]] = (j % 2 == 1) ? omega - a : a;
    if (a + b < omega) {
      mult[xs[len - 1]] = a;
      mult[extra] = omega - a - b;
    } else {
      mult[xs[len - 1]] = omega - b;
      mult[extra] = 0;
    }
  } else {
    // x_1 .. x_{2k+1}, oriented so that the end with the smaller clique
    // number comes first.
    std::vector<int> path = xs;
    int lo = a;
    int hi = b;
    if (a > b) {
      std::reverse(path.begin(), path.end());
      std::swap(lo, hi);
    }
    for (int j = 1; j < len; ++j) mult[path[j - 1]] = (j % 2 == 1) ? omega - lo : lo;
    mult[path[len - 1]] = omega - hi;
  }

  Replicated out;
  out.graph = blow_up(base, mult, &out.origin);
  if (extra != -1) {
    for (int& o : out.origin) {
      if (o == extra) o = xs[len - 1];
    }
  }
  return out;
}

BlockColoring block_coloring(const Block& block, int omega, const Colorer& color, const Limits& limits) {
  const VertexSet la = local_set(block, block.a);
  const VertexSet lb = local_set(block, block.b);
  const int a = clique_of(block.graph, la, limits);
  const int b = clique_of(block.graph, lb, limits);
  if (omega < clique_of(block.graph, block.graph.vertices(), limits)) {
    throw InvalidInput("block_coloring: omega is below the block's clique number");
  }

  const Replicated h = replicated_block(block, omega, a, b);
  const Coloring hc = color(h.graph);
  if (!hc.is_proper(h.graph)) throw InternalInconsistency("block_coloring: colorer returned an improper coloring");
  if (hc.num_colors > omega) {
    throw InvalidInput("block_coloring: replicated block needs more than omega colors, block is not perfect; " +
                       describe(block, omega, a, b));
  }

  BlockColoring out;
  out.side = block.side;
  out.omega = omega;
  out.a = a;
  out.b = b;
  out.parity = block.parity;
  out.replicated_order = h.graph.order();
  out.colors.assign(block.parent_order, -1);
  const int side_size = block.side_vertices.size();
  for (int i = 0; i < h.graph.order(); ++i) {
    const int v = h.origin[i];
    if (v < side_size) out.colors[block.to_parent[v]] = hc.colors[i];
  }
  std::set<int> ca;
  std::set<int> cb;
  for (int v : block.a) ca.insert(out.colors[v]);
  for (int v : block.b) cb.insert(out.colors[v]);
  out.colors_a.assign(ca.begin(), ca.end());
  out.colors_b.assign(cb.begin(), cb.end());
  for (int c : ca) out.common += static_cast<int>(cb.count(c));

  const int want = out.expected_common();
  if (static_cast<int>(ca.size()) != a || static_cast<int>(cb.size()) != b || (want != -1 && out.common != want)) {
    std::ostringstream os;
    os << "block_coloring: |C(A)| = " << ca.size() << ", |C(B)| = " << cb.size() << ", common = " << out.common
       << " (expected " << want << "); " << describe(block, omega, a, b);
    throw InternalInconsistency(os.str());
  }
  return out;
}

namespace {

/// Labels for one side: each group of colors gets consecutive labels from
/// the bottom (0 upward) or the top (omega-1 downward).
class SideLabels {
 public:
  explicit SideLabels(int omega) : omega_(omega), label_(omega, -1), taken_(omega, false) {}

  void place(const std::vector<int>& colors, int start, int step) {
    int at = start;
    for (int c : colors) {
      if (at < 0 || at >= omega_ || taken_[at] || label_[c] != -1) {
        throw InternalInconsistency("combine_colorings: label ranges collide");
      }
      label_[c] = at;
      taken_[at] = true;
      at += step;
    }
  }

  std::vector<int> finish() {
    int free = 0;
    for (int c = 0; c < omega_; ++c) {
      if (label_[c] != -1) continue;
      while (taken_[free]) ++free;
      label_[c] = free;
      taken_[free] = true;
    }
    return label_;
  }

 private:
  int omega_;
  std::vector<int> label_;
  std::vector<bool> taken_;
};

struct Groups {
  std::vector<int> a_only, common, b_only;
};

Groups groups_of(const BlockColoring& c) {
  Groups g;
  for (int x : c.colors_a) {
    (std::binary_search(c.colors_b.begin(), c.colors_b.end(), x) ? g.common : g.a_only).push_back(x);
  }
  for (int x : c.colors_b) {
    if (!std::binary_search(c.colors_a.begin(), c.colors_a.end(), x)) g.b_only.push_back(x);
  }
  return g;
}

/// Odd paths: one of C(A), C(B) fills labels from the bottom, the other from
/// the top, and shared colors sit where the two ranges overlap.
std::vector<int> odd_labels(const BlockColoring& c, bool a_bottom, int omega) {
  const Groups g = groups_of(c);
  const auto& low_only = a_bottom ? g.a_only : g.b_only;
  const auto& high_only = a_bottom ? g.b_only : g.a_only;
  const int low_count = a_bottom ? c.a : c.b;
  SideLabels labels(omega);
  labels.place(low_only, 0, 1);
  labels.place(g.common, low_count - static_cast<int>(g.common.size()), 1);
  labels.place(high_only, omega - static_cast<int>(high_only.size()), 1);
  return labels.finish();
}

/// Even paths: C(A) and C(B) both start at the same end, shared colors first.
std::vector<int> even_labels(const BlockColoring& c, bool bottom, int omega) {
  const Groups g = groups_of(c);
  const int k = static_cast<int>(g.common.size());
  SideLabels labels(omega);
  if (bottom) {
    labels.place(g.common, 0, 1);
    labels.place(g.a_only, k, 1);
    labels.place(g.b_only, k, 1);
  } else {
    labels.place(g.common, omega - 1, -1);
    labels.place(g.a_only, omega - 1 - k, -1);
    labels.place(g.b_only, omega - 1 - k, -1);
  }
  return labels.finish();
}

void apply(const BlockColoring& c, const std::vector<int>& label, int side, int component, const VertexSet& who,
           std::vector<int>& out, std::vector<Relabel>& log) {
  for (int v : who) out[v] = label[c.colors[v]];
  for (int from = 0; from < static_cast<int>(label.size()); ++from) {
    if (label[from] != from) log.push_back({side, component, from, label[from]});
  }
}

/// Keeps `fixed` as colored and permutes each component of the other side
/// so that its A colors avoid C(A_fixed) and its B colors avoid C(B_fixed).
void combine_split(const Graph& g, const BlockColoring& fixed, const BlockColoring& loose, const VertexSet& fixed_side,
                   const VertexSet& loose_side, const VertexSet& loose_a, const VertexSet& loose_b, int omega,
                   std::vector<int>& out, std::vector<Relabel>& log) {
  std::vector<int> identity(omega);
  for (int c = 0; c < omega; ++c) identity[c] = c;
  apply(fixed, identity, fixed.side, -1, fixed_side, out, log);
  for (const VertexSet& comp : connected_components(g, loose_side)) {
    const bool has_a = comp.intersects(loose_a);
    const bool has_b = comp.intersects(loose_b);
    if (has_a && has_b) throw InternalInconsistency("combine_colorings: A and B share a component");
    if (!has_a && !has_b) {
      apply(loose, identity, loose.side, comp.first(), comp, out, log);
      continue;
    }
    const auto& avoid = has_a ? fixed.colors_a : fixed.colors_b;
    std::set<int> needed;
    for (int v : comp & (has_a ? loose_a : loose_b)) needed.insert(loose.colors[v]);
    SideLabels labels(omega);
    std::vector<int> targets;
    for (int c = 0; c < omega && targets.size() < needed.size(); ++c) {
      if (!std::binary_search(avoid.begin(), avoid.end(), c)) targets.push_back(c);
    }
    if (targets.size() < needed.size()) throw InternalInconsistency("combine_colorings: not enough free colors");
    std::size_t i = 0;
    for (int c : needed) labels.place({c}, targets[i++], 1);
    apply(loose, labels.finish(), loose.side, comp.first(), comp, out, log);
  }
}

}  // namespace

CombinedColoring combine_colorings(const Graph& g, const TwoJoin& tj, const BlockPair& blocks,
                                   const BlockColoring& c1, const BlockColoring& c2, int omega) {
  if (!is_two_join(g, tj)) throw InvalidInput("combine_colorings: not a 2-join of the graph");
  if (omega < c1.a + c2.a || omega < c1.b + c2.b) {
    throw InvalidInput("combine_colorings: omega is below a1 + a2 or b1 + b2");
  }
  CombinedColoring result;
  std::vector<int> out(g.order(), -1);
  if (blocks.g1.marker == MarkerKind::pair) {
    combine_split(g, c1, c2, tj.V1, tj.V2, tj.A2, tj.B2, omega, out, result.log);
  } else if (blocks.g2.marker == MarkerKind::pair) {
    combine_split(g, c2, c1, tj.V2, tj.V1, tj.A1, tj.B1, omega, out, result.log);
  } else {
    if (!blocks.parities_match()) throw InvalidInput("combine_colorings: block paths have different parities");
    if (*blocks.g1.parity == Parity::odd) {
      apply(c1, odd_labels(c1, true, omega), 1, -1, tj.V1, out, result.log);
      apply(c2, odd_labels(c2, false, omega), 2, -1, tj.V2, out, result.log);
    } else {
      apply(c1, even_labels(c1, true, omega), 1, -1, tj.V1, out, result.log);
      apply(c2, even_labels(c2, false, omega), 2, -1, tj.V2, out, result.log);
    }
  }
  result.coloring = Coloring{out, omega};
  if (!result.coloring.is_proper(g)) {
    std::ostringstream os;
    os << "combine_colorings: merged coloring is improper (omega " << omega << ", a1 " << c1.a << ", b1 " << c1.b
       << ", a2 " << c2.a << ", b2 " << c2.b << ") [graph6 " << to_graph6(g) << "]";
    throw InternalInconsistency(os.str());
  }
  return result;
}

std::pair<Induced, Induced> six_join_blocks(const Graph& g, const SixJoin& sj) {
  if (!is_six_join(g, sj)) throw InvalidInput("six_join_blocks: not a 6-join of the graph");
  VertexSet gx = sj.X[0] | sj.X[1] | sj.X[2] | sj.X[3];
  VertexSet gy = sj.Y[0] | sj.Y[1] | sj.Y[2] | sj.Y[3];
  for (int j = 0; j < 3; ++j) {
    gx.insert(sj.Y[j].first());
    gy.insert(sj.X[j].first());
  }
  return {induced_subgraph(g, gx), induced_subgraph(g, gy)};
}

std::vector<BlockSummary> DecompositionNode::all_blocks() const {
  std::vector<BlockSummary> out = blocks;
  for (const auto& child : children) {
    auto more = child.all_blocks();
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

namespace {

BlockSummary summarize(const BlockColoring& c) {
  return BlockSummary{c.side, c.a, c.b, c.omega, c.parity, c.common, c.expected_common(), c.replicated_order};
}

PerfectColoring color_recursive(const Graph& g, const Limits& limits) {
  PerfectColoring result;
  DecompositionNode& node = result.tree;
  node.order = g.order();
  if (g.order() == 0) {
    node.method = ColorMethod::basic;
    return result;
  }
  node.omega = clique_number(g, wide(limits));

  const BasicClass basic = recognize_basic(g);
  if (basic.tag != BasicTag::not_basic) {
    node.method = ColorMethod::basic;
    node.basic = basic.tag;
    result.coloring = color_basic(g, basic);
  } else if (auto tj = (g.order() <= kMaskVertices) ? find_two_join(g) : std::nullopt) {
    node.method = ColorMethod::two_join;
    node.two_join = tj;
    const BlockPair blocks = two_join_blocks(g, *tj);
    // Smaller replicated blocks go through the same pipeline; the rest use
    // the exact oracle, which keeps the recursion finite.
    Colorer colorer = [&](const Graph& h) {
      if (h.order() < g.order()) {
        PerfectColoring child = color_recursive(h, limits);
        node.children.push_back(std::move(child.tree));
        return child.coloring;
      }
      return chromatic_number(h, wide(limits)).coloring;
    };
    const BlockColoring c1 = block_coloring(blocks.g1, node.omega, colorer, limits);
    const BlockColoring c2 = block_coloring(blocks.g2, node.omega, colorer, limits);
    node.blocks = {summarize(c1), summarize(c2)};
    result.coloring = combine_colorings(g, *tj, blocks, c1, c2, node.omega).coloring;
  } else {
    node.method = ColorMethod::oracle;
    result.coloring = chromatic_number(g, wide(limits)).coloring;
  }

  result.coloring = normalized(result.coloring.colors);
  if (!result.coloring.is_proper(g) || result.coloring.num_colors != node.omega) {
    throw InternalInconsistency("perfect_color: produced " + std::to_string(result.coloring.num_colors) +
                                " colors for omega " + std::to_string(node.omega) + " [graph6 " + to_graph6(g) +
                                "]");
  }
  return result;
}

}  // namespace

PerfectColoring perfect_color(const Graph& g, const PerfectColorOptions& options) {
  if (options.verify_perfect && g.order() <= options.limits.perfect) {
    const auto check = is_perfect(g, options.limits);
    if (!check.perfect) {
      throw InvalidInput("perfect_color: graph is not perfect, imperfect induced subgraph on " +
                         check.witness->to_string());
    }
  }
  return color_recursive(g, options.limits);
}

}  // namespace berge
