#include "berge/oracle.hpp"

#include <algorithm>
#include <map>

#include "berge/errors.hpp"
#include "berge/ops.hpp"
#include "bits.hpp"

namespace berge {

using detail::Mask;
using detail::bit;
using detail::lowest;
using detail::popcount;

bool Coloring::is_proper(const Graph& g) const {
  if (static_cast<int>(colors.size()) != g.order()) return false;
  for (int c : colors) {
    if (c < 0 || c >= num_colors) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

int Coloring::distinct_colors() const {
  std::vector<char> seen(num_colors, 0);
  int count = 0;
  for (int c : colors) {
    if (c >= 0 && c < num_colors && !seen[c]) {
      seen[c] = 1;
      ++count;
    }
  }
  return count;
}

std::vector<VertexSet> Coloring::classes() const {
  const int n = static_cast<int>(colors.size());
  std::vector<VertexSet> out(num_colors, VertexSet(n));
  for (int v = 0; v < n; ++v) out[colors[v]].insert(v);
  return out;
}

Coloring normalized(std::vector<int> colors) {
  std::map<int, int> relabel;
  for (int& c : colors) {
    auto [it, fresh] = relabel.try_emplace(c, static_cast<int>(relabel.size()));
    c = it->second;
  }
  return Coloring{std::move(colors), static_cast<int>(relabel.size())};
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<Mask>& adj) : adj_(adj) {}

  Mask run() {
    const int n = static_cast<int>(adj_.size());
    expand(0, 0, detail::low_bits(n), 0);
    return best_;
  }

 private:
  void expand(Mask current, int size, Mask candidates, Mask excluded) {
    if (!candidates && !excluded) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = current;
      }
      return;
    }
    if (size + popcount(candidates) <= best_size_) return;
    // Tomita pivot: the vertex covering most candidates.
    int pivot = -1;
    int pivot_score = -1;
    detail::for_each_bit(candidates | excluded, [&](int u) {
      int score = popcount(candidates & adj_[u]);
      if (score > pivot_score) {
        pivot_score = score;
        pivot = u;
      }
    });
    Mask branch = candidates & ~adj_[pivot];
    while (branch) {
      int v = lowest(branch);
      branch &= branch - 1;
      expand(current | bit(v), size + 1, candidates & adj_[v], excluded & adj_[v]);
      candidates &= ~bit(v);
      excluded |= bit(v);
      if (size + popcount(candidates) <= best_size_) return;
    }
  }

  const std::vector<Mask>& adj_;
  Mask best_ = 0;
  int best_size_ = 0;
};

Mask max_clique_mask(const std::vector<Mask>& adj) { return CliqueSearch(adj).run(); }

class ColoringSearch {
 public:
  ColoringSearch(const std::vector<Mask>& adj, Mask seed_clique)
      : adj_(adj), n_(static_cast<int>(adj.size())), colors_(n_, -1), lower_(popcount(seed_clique)) {
    int c = 0;
    detail::for_each_bit(seed_clique, [&](int v) { colors_[v] = c++; });
    colored_ = c;
    best_ = n_ + 1;
  }

  std::vector<int> run() {
    search(lower_);
    return best_colors_;
  }

 private:
  Mask saturation(int v) const {
    Mask s = 0;
    detail::for_each_bit(adj_[v], [&](int w) {
      if (colors_[w] >= 0) s |= bit(colors_[w]);
    });
    return s;
  }

  void search(int used) {
    if (used >= best_ || best_ == lower_) return;
    if (colored_ == n_) {
      best_ = used;
      best_colors_ = colors_;
      return;
    }
    int v = -1;
    int v_sat = -1;
    int v_deg = -1;
    Mask uncolored = 0;
    for (int u = 0; u < n_; ++u) {
      if (colors_[u] < 0) uncolored |= bit(u);
    }
    detail::for_each_bit(uncolored, [&](int u) {
      int s = popcount(saturation(u));
      int d = popcount(adj_[u] & uncolored);
      if (s > v_sat || (s == v_sat && d > v_deg)) {
        v = u;
        v_sat = s;
        v_deg = d;
      }
    });
    const Mask forbidden = saturation(v);
    ++colored_;
    for (int c = 0; c < used; ++c) {
      if ((forbidden >> c) & 1U) continue;
      colors_[v] = c;
      search(used);
      if (best_ == lower_) break;
    }
    if (best_ != lower_ && used + 1 < best_) {
      colors_[v] = used;
      search(used + 1);
    }
    colors_[v] = -1;
    --colored_;
  }

  const std::vector<Mask>& adj_;
  int n_;
  std::vector<int> colors_;
  int colored_ = 0;
  int lower_;
  int best_;
  std::vector<int> best_colors_;
};

}  // namespace

std::vector<int> max_clique(const Graph& g, const Limits& limits) {
  detail::require_at_most(g, limits.clique, "max_clique");
  return detail::to_vector(max_clique_mask(detail::masks_of(g, "max_clique")));
}

int clique_number(const Graph& g, const Limits& limits) { return static_cast<int>(max_clique(g, limits).size()); }

std::vector<int> max_stable_set(const Graph& g, const Limits& limits) {
  detail::require_at_most(g, limits.clique, "max_stable_set");
  const auto adj = detail::complement_masks(detail::masks_of(g, "max_stable_set"));
  return detail::to_vector(max_clique_mask(adj));
}

int stability_number(const Graph& g, const Limits& limits) {
  return static_cast<int>(max_stable_set(g, limits).size());
}

void for_each_clique_of_size(const Graph& g, int k, const std::function<void(const std::vector<int>&)>& visit) {
  const auto adj = detail::masks_of(g, "for_each_clique_of_size");
  std::vector<int> current;
  std::function<void(Mask)> grow = [&](Mask candidates) {
    if (static_cast<int>(current.size()) == k) {
      visit(current);
      return;
    }
    if (static_cast<int>(current.size()) + popcount(candidates) < k) return;
    while (candidates) {
      int v = lowest(candidates);
      candidates &= candidates - 1;
      current.push_back(v);
      grow(candidates & adj[v]);
      current.pop_back();
    }
  };
  if (k >= 0) grow(detail::low_bits(g.order()));
}

ChromaticResult chromatic_number(const Graph& g, const Limits& limits) {
  detail::require_at_most(g, limits.clique, "chromatic_number");
  if (g.order() == 0) return {};
  const auto adj = detail::masks_of(g, "chromatic_number");
  const Mask clique = max_clique_mask(adj);
  auto colors = ColoringSearch(adj, clique).run();
  ChromaticResult result;
  result.coloring = normalized(std::move(colors));
  result.chi = result.coloring.num_colors;
  if (!result.coloring.is_proper(g)) throw InternalInconsistency("chromatic_number produced an improper coloring");
  return result;
}

SubgraphTables subgraph_tables(const Graph& g, const Limits& limits) {
  detail::require_at_most(g, std::min(limits.perfect, 24), "subgraph_tables");
  const int n = g.order();
  const auto adj = detail::masks_of(g, "subgraph_tables");
  const std::size_t total = std::size_t{1} << n;
  SubgraphTables t{n, std::vector<std::uint8_t>(total, 0), std::vector<std::uint8_t>(total, 0)};
  std::vector<std::uint8_t> stable(total, 0);
  stable[0] = 1;
  for (Mask s = 1; s < total; ++s) {
    const int v = lowest(s);
    const Mask rest = s & ~bit(v);
    stable[s] = stable[rest] && !(adj[v] & rest);
    t.omega[s] = std::max<std::uint8_t>(t.omega[rest], 1 + t.omega[rest & adj[v]]);
    // v's color class is {v} plus a stable subset of its non-neighbours.
    const Mask free = rest & ~adj[v];
    std::uint8_t best = 1 + t.chi[rest];
    for (Mask sub = free;; sub = (sub - 1) & free) {
      if (sub && stable[sub]) best = std::min<std::uint8_t>(best, 1 + t.chi[rest & ~sub]);
      if (sub == 0) break;
    }
    t.chi[s] = best;
  }
  return t;
}

namespace {

bool lex_less(Mask a, Mask b) {
  while (a && b) {
    int x = lowest(a);
    int y = lowest(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

}  // namespace

PerfectionResult is_perfect(const Graph& g, const Limits& limits) {
  detail::require_at_most(g, limits.perfect, "is_perfect");
  const auto tables = subgraph_tables(g, limits);
  const int n = g.order();
  const std::size_t total = std::size_t{1} << n;
  for (int k = 1; k <= n; ++k) {
    bool found = false;
    Mask best = 0;
    for (Mask s = 1; s < total; ++s) {
      if (popcount(s) != k || tables.omega[s] == tables.chi[s]) continue;
      if (!found || lex_less(s, best)) best = s;
      found = true;
    }
    if (found) return PerfectionResult{false, detail::to_set(n, best)};
  }
  return PerfectionResult{true, std::nullopt};
}

bool is_minimally_imperfect(const Graph& g, const Limits& limits) {
  const auto r = is_perfect(g, limits);
  return !r.perfect && r.witness->size() == g.order();
}

bool lovasz_bound_holds(const Graph& g, const Limits& limits) {
  detail::require_at_most(g, limits.perfect, "lovasz_bound_holds");
  const int n = g.order();
  const auto adj = detail::masks_of(g, "lovasz_bound_holds");
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> omega(total, 0);
  std::vector<std::uint8_t> alpha(total, 0);
  for (Mask s = 1; s < total; ++s) {
    const int v = lowest(s);
    const Mask rest = s & ~bit(v);
    omega[s] = std::max<std::uint8_t>(omega[rest], 1 + omega[rest & adj[v]]);
    alpha[s] = std::max<std::uint8_t>(alpha[rest], 1 + alpha[rest & ~adj[v]]);
    if (popcount(s) > alpha[s] * omega[s]) return false;
  }
  return true;
}

}  // namespace berge
