#include "berge/basic.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <set>

#include "berge/errors.hpp"

namespace berge {

std::string_view to_string(BasicTag tag) {
  switch (tag) {
    case BasicTag::bipartite:
      return "bipartite";
    case BasicTag::complement_of_bipartite:
      return "complement_of_bipartite";
    case BasicTag::line_of_bipartite:
      return "line_of_bipartite";
    case BasicTag::complement_of_line_of_bipartite:
      return "complement_of_line_of_bipartite";
    case BasicTag::not_basic:
      return "not_basic";
  }
  return "unknown";
}

namespace {

bool has_claw(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet& nb = g.neighbors(v);
    for (int a : nb) {
      const VertexSet far = nb - g.neighbors(a);
      for (int b = far.next(a + 1); b != -1; b = far.next(b + 1)) {
        VertexSet third = far - g.neighbors(b);
        third.erase(a);
        third.erase(b);
        if (third.next(b + 1) != -1) return true;
      }
    }
  }
  return false;
}

class RootSearch {
 public:
  explicit RootSearch(const Graph& g) : g_(g), ends_(g.order(), {-1, -1}), assigned_(g.order()) {}

  bool run() {
    for (const VertexSet& comp : connected_components(g_)) {
      const auto vs = comp.elements();
      if (vs.size() == 3 && g_.adjacent(vs[0], vs[1]) && g_.adjacent(vs[0], vs[2]) && g_.adjacent(vs[1], vs[2])) {
        const int center = fresh();
        for (int v : vs) place(v, center, fresh());
        continue;
      }
      order_.clear();
      parent_.assign(g_.order(), -1);
      bfs(vs.front(), comp);
      place(order_.front(), fresh(), fresh());
      if (!assign(1)) return false;
    }
    return true;
  }

  LineRoot result() const {
    LineRoot r{Graph(root_count_), {}};
    for (int v = 0; v < g_.order(); ++v) {
      auto [x, y] = ends_[v];
      r.root.add_edge(x, y);
      r.edge_of.emplace_back(std::min(x, y), std::max(x, y));
    }
    return r;
  }

 private:
  int fresh() {
    incident_.emplace_back();
    return root_count_++;
  }

  void place(int v, int s, int t) {
    ends_[v] = {s, t};
    assigned_.insert(v);
    incident_[s].push_back(v);
    incident_[t].push_back(v);
  }

  void unplace(int v) {
    auto [s, t] = ends_[v];
    incident_[s].pop_back();
    incident_[t].pop_back();
    assigned_.erase(v);
    ends_[v] = {-1, -1};
  }

  void bfs(int root, const VertexSet& comp) {
    std::deque<int> queue{root};
    VertexSet seen(g_.order());
    seen.insert(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order_.push_back(v);
      for (int w : g_.neighbors(v)) {
        if (comp.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          parent_[w] = v;
          queue.push_back(w);
        }
      }
    }
  }

  bool has_end(int v, int x) const { return ends_[v][0] == x || ends_[v][1] == x; }

  bool consistent(int e, int s, int t) const {
    for (int x : {s, t}) {
      if (x >= root_count_) continue;
      for (int h : incident_[x]) {
        if (!g_.adjacent(e, h)) return false;
        if (has_end(h, s) && has_end(h, t)) return false;
      }
    }
    for (int h : g_.neighbors(e)) {
      if (!assigned_.contains(h)) continue;
      if (has_end(h, s) == has_end(h, t)) return false;
    }
    return true;
  }

  bool assign(std::size_t idx) {
    if (idx == order_.size()) return true;
    const int e = order_[idx];
    const auto parent_ends = ends_[parent_[e]];
    for (int k = 0; k < 2; ++k) {
      const int s = parent_ends[k];
      if (k == 1 && parent_ends[0] == s) break;
      // Assigned neighbours that miss s must contain the other end.
      std::vector<int> options;
      bool constrained = false;
      for (int h : g_.neighbors(e)) {
        if (!assigned_.contains(h) || has_end(h, s)) continue;
        std::vector<int> here{ends_[h][0], ends_[h][1]};
        if (!constrained) {
          options = here;
          constrained = true;
        } else {
          std::erase_if(options, [&](int x) { return std::find(here.begin(), here.end(), x) == here.end(); });
        }
      }
      if (!constrained) options = {root_count_};
      for (int t : options) {
        if (t == s || !consistent(e, s, t)) continue;
        const bool is_new = (t == root_count_);
        if (is_new) fresh();
        place(e, s, t);
        if (assign(idx + 1)) return true;
        unplace(e);
        if (is_new) {
          incident_.pop_back();
          --root_count_;
        }
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::array<int, 2>> ends_;
  VertexSet assigned_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> order_;
  std::vector<int> parent_;
  int root_count_ = 0;
};

bool valid_bipartition(const Graph& g, const Bipartition& bp) {
  if ((bp.left | bp.right) != g.vertices() || bp.left.intersects(bp.right)) return false;
  for (auto [u, v] : g.edges()) {
    if (bp.left.contains(u) == bp.left.contains(v)) return false;
  }
  return true;
}

}  // namespace

std::optional<LineRoot> line_graph_root(const Graph& g) {
  if (has_claw(g)) return std::nullopt;
  RootSearch search(g);
  if (!search.run()) return std::nullopt;
  return search.result();
}

bool is_line_root_of(const Graph& g, const LineRoot& r) {
  const int n = g.order();
  if (static_cast<int>(r.edge_of.size()) != n || r.root.num_edges() != n) return false;
  std::set<Edge> seen;
  for (auto [x, y] : r.edge_of) {
    if (x < 0 || y < 0 || x >= r.root.order() || y >= r.root.order() || !r.root.adjacent(x, y)) return false;
    if (!seen.insert({std::min(x, y), std::max(x, y)}).second) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto [a, b] = r.edge_of[i];
      auto [c, d] = r.edge_of[j];
      const bool share = a == c || a == d || b == c || b == d;
      if (share != g.adjacent(i, j)) return false;
    }
  }
  return true;
}

BasicMembership basic_membership(const Graph& g) {
  BasicMembership m;
  const Graph co = complement(g);
  m.bipartite = is_bipartite(g).has_value();
  m.complement_of_bipartite = is_bipartite(co).has_value();
  if (auto r = line_graph_root(g)) m.line_of_bipartite = is_bipartite(r->root).has_value();
  if (auto r = line_graph_root(co)) m.complement_of_line_of_bipartite = is_bipartite(r->root).has_value();
  return m;
}

BasicClass recognize_basic(const Graph& g) {
  BasicClass c;
  if (auto bp = is_bipartite(g)) {
    c.tag = BasicTag::bipartite;
    c.bipartition = std::move(bp);
    return c;
  }
  const Graph co = complement(g);
  if (auto bp = is_bipartite(co)) {
    c.tag = BasicTag::complement_of_bipartite;
    c.bipartition = std::move(bp);
    return c;
  }
  if (auto r = line_graph_root(g); r && is_bipartite(r->root)) {
    c.tag = BasicTag::line_of_bipartite;
    c.root = std::move(r);
    return c;
  }
  if (auto r = line_graph_root(co); r && is_bipartite(r->root)) {
    c.tag = BasicTag::complement_of_line_of_bipartite;
    c.root = std::move(r);
    return c;
  }
  return c;
}

bool witness_is_valid(const Graph& g, const BasicClass& c) {
  switch (c.tag) {
    case BasicTag::bipartite:
      return c.bipartition && valid_bipartition(g, *c.bipartition);
    case BasicTag::complement_of_bipartite:
      return c.bipartition && valid_bipartition(complement(g), *c.bipartition);
    case BasicTag::line_of_bipartite:
      return c.root && is_line_root_of(g, *c.root) && is_bipartite(c.root->root);
    case BasicTag::complement_of_line_of_bipartite:
      return c.root && is_line_root_of(complement(g), *c.root) && is_bipartite(c.root->root);
    case BasicTag::not_basic:
      return false;
  }
  return false;
}

bool EdgeColoring::is_proper() const {
  std::set<std::pair<int, int>> used;  // (vertex, color)
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int c = colors[i];
    if (c < 0 || c >= num_colors) return false;
    if (!used.insert({edges[i].first, c}).second) return false;
    if (!used.insert({edges[i].second, c}).second) return false;
  }
  return true;
}

int EdgeColoring::color_of(int u, int v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) throw InvalidInput("color_of: not an edge");
  return colors[static_cast<std::size_t>(it - edges.begin())];
}

std::vector<int> bipartite_matching(const Graph& g, const Bipartition& sides) {
  const int n = g.order();
  std::vector<int> mate(n, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int u) {
    for (int w : g.neighbors(u)) {
      if (visited[w]) continue;
      visited[w] = 1;
      if (mate[w] == -1 || augment(mate[w])) {
        mate[u] = w;
        mate[w] = u;
        return true;
      }
    }
    return false;
  };
  for (int u : sides.left) {
    visited.assign(n, 0);
    augment(u);
  }
  return mate;
}

VertexSet konig_vertex_cover(const Graph& g, const Bipartition& sides, const std::vector<int>& mate) {
  const int n = g.order();
  VertexSet reached(n);
  std::deque<int> queue;
  for (int u : sides.left) {
    if (mate[u] == -1) {
      reached.insert(u);
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    // u is on the left: leave by non-matching edges, return by matching ones.
    for (int w : g.neighbors(u)) {
      if (reached.contains(w) || mate[u] == w) continue;
      reached.insert(w);
      const int back = mate[w];
      if (back != -1 && !reached.contains(back)) {
        reached.insert(back);
        queue.push_back(back);
      }
    }
  }
  return (sides.left - reached) | (sides.right & reached);
}

EdgeColoring konig_edge_coloring(const Graph& g) {
  if (!is_bipartite(g)) throw InvalidInput("konig_edge_coloring: graph is not bipartite");
  const int n = g.order();
  const int delta = g.max_degree();
  std::vector<std::vector<int>> at(n, std::vector<int>(delta, -1));
  auto free_color = [&](int v) {
    for (int c = 0; c < delta; ++c) {
      if (at[v][c] == -1) return c;
    }
    throw InternalInconsistency("konig_edge_coloring: no free color");
  };

  EdgeColoring ec;
  ec.edges = g.edges();
  ec.num_colors = delta;
  for (auto [u, v] : ec.edges) {
    const int a = free_color(u);
    const int b = free_color(v);
    if (at[v][a] != -1) {
      // Swap a and b along the a/b path leaving v; it cannot reach u.
      struct Step {
        int x, y, c;
      };
      std::vector<Step> walk;
      int x = v;
      int c = a;
      while (at[x][c] != -1) {
        const int y = at[x][c];
        walk.push_back({x, y, c});
        x = y;
        c = (c == a) ? b : a;
      }
      for (const auto& s : walk) at[s.x][s.c] = at[s.y][s.c] = -1;
      for (const auto& s : walk) {
        const int swapped = (s.c == a) ? b : a;
        at[s.x][swapped] = s.y;
        at[s.y][swapped] = s.x;
      }
    }
    at[u][a] = v;
    at[v][a] = u;
  }
  ec.colors.reserve(ec.edges.size());
  for (auto [u, v] : ec.edges) {
    const auto it = std::find(at[u].begin(), at[u].end(), v);
    ec.colors.push_back(static_cast<int>(it - at[u].begin()));
  }
  if (!ec.is_proper()) throw InternalInconsistency("konig_edge_coloring: improper result");
  return ec;
}

Coloring color_basic(const Graph& g, const BasicClass& c) {
  if (!witness_is_valid(g, c)) throw InvalidInput("color_basic: witness does not match the graph");
  const int n = g.order();
  std::vector<int> colors(n, 0);
  switch (c.tag) {
    case BasicTag::bipartite:
      for (int v : c.bipartition->right) colors[v] = 1;
      break;
    case BasicTag::complement_of_bipartite: {
      // Stable sets of g are cliques of the complement: matched pairs and
      // leftover single vertices.
      const Graph co = complement(g);
      const auto mate = bipartite_matching(co, *c.bipartition);
      int next = 0;
      std::vector<int> assigned(n, -1);
      for (int v = 0; v < n; ++v) {
        if (assigned[v] != -1) continue;
        assigned[v] = next;
        if (mate[v] != -1) assigned[mate[v]] = next;
        ++next;
      }
      colors = assigned;
      break;
    }
    case BasicTag::line_of_bipartite: {
      const auto ec = konig_edge_coloring(c.root->root);
      for (int v = 0; v < n; ++v) colors[v] = ec.color_of(c.root->edge_of[v].first, c.root->edge_of[v].second);
      break;
    }
    case BasicTag::complement_of_line_of_bipartite: {
      // Stable sets of g are stars of the root; a minimum vertex cover of the
      // root gives one star per cover vertex.
      const Graph& root = c.root->root;
      const auto sides = is_bipartite(root);
      const auto mate = bipartite_matching(root, *sides);
      const VertexSet cover = konig_vertex_cover(root, *sides, mate);
      for (int v = 0; v < n; ++v) {
        auto [x, y] = c.root->edge_of[v];
        colors[v] = cover.contains(x) ? x : y;
      }
      break;
    }
    case BasicTag::not_basic:
      break;
  }
  Coloring out = normalized(std::move(colors));
  if (!out.is_proper(g)) throw InternalInconsistency("color_basic: improper coloring");
  return out;
}

}  // namespace berge
