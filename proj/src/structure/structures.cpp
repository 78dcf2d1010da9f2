#include "berge/structures.hpp"

#include <algorithm>

#include "berge/errors.hpp"
#include "berge/graph6.hpp"
#include "berge/holes.hpp"
#include "berge/ops.hpp"
#include "bits.hpp"

namespace berge {

using detail::Mask;
using detail::bit;
using detail::lowest;
using detail::popcount;

std::string_view to_string(CutsetTag tag) {
  switch (tag) {
    case CutsetTag::star:
      return "star";
    case CutsetTag::double_star:
      return "double_star";
    case CutsetTag::t_cutset:
      return "t_cutset";
    case CutsetTag::u_cutset:
      return "u_cutset";
    case CutsetTag::plain_skew:
      return "plain_skew";
  }
  return "unknown";
}

namespace {

[[noreturn]] void bad_witness(const Graph& g, const char* who) {
  throw InternalInconsistency(std::string(who) + ": witness failed validation [graph6 " + to_graph6(g) + "]");
}

bool complete_to(const Graph& g, const VertexSet& xs, const VertexSet& ys) {
  for (int x : xs) {
    for (int y : ys) {
      if (x != y && !g.adjacent(x, y)) return false;
    }
  }
  return true;
}

bool anticomplete_to(const Graph& g, const VertexSet& xs, const VertexSet& ys) {
  for (int x : xs) {
    if (g.neighbors(x).intersects(ys)) return false;
  }
  return true;
}

bool is_partition(const Graph& g, std::initializer_list<const VertexSet*> parts) {
  VertexSet seen = g.empty_set();
  for (const VertexSet* p : parts) {
    if (p->universe() != g.order() || p->intersects(seen)) return false;
    seen |= *p;
  }
  return seen == g.vertices();
}

int components_after_removal(const Graph& g, const VertexSet& s) {
  return static_cast<int>(connected_components(g, g.vertices() - s).size());
}

// --- 2-join ---------------------------------------------------------------

/// Smallest V1 containing s1 that is consistent with the seed, or 0 when the
/// seed cannot be extended.
Mask close_side(const std::vector<Mask>& adj, Mask all, int a2, int b2, Mask s1) {
  while (true) {
    if (s1 & (bit(a2) | bit(b2))) return 0;
    const Mask a = adj[a2] & s1;
    const Mask b = adj[b2] & s1;
    if (a & b) return 0;
    Mask forced = 0;
    detail::for_each_bit(all & ~s1, [&](int y) {
      const Mask t = adj[y] & s1;
      if (t != 0 && t != a && t != b) forced |= bit(y);
    });
    if (!forced) return s1;
    s1 |= forced;
  }
}

TwoJoin canonical_two_join(TwoJoin tj) {
  if (!tj.V1.contains(0)) {
    std::swap(tj.V1, tj.V2);
    std::swap(tj.A1, tj.A2);
    std::swap(tj.B1, tj.B2);
  }
  if ((tj.B1 | tj.B2).first() < (tj.A1 | tj.A2).first()) {
    std::swap(tj.A1, tj.B1);
    std::swap(tj.A2, tj.B2);
  }
  return tj;
}

}  // namespace

std::optional<TwoJoin> find_two_join(const Graph& g) {
  const int n = g.order();
  if (n < 6) return std::nullopt;
  const auto adj = detail::masks_of(g, "find_two_join");
  const Mask all = detail::low_bits(n);

  auto accept = [&](Mask v1) { return popcount(v1) >= 3 && popcount(all & ~v1) >= 3; };

  for (int a1 = 0; a1 < n; ++a1) {
    const Mask above = all & ~detail::low_bits(a1 + 1);
    for (int a2 : detail::to_vector(adj[a1] & above)) {
      for (int b1 : detail::to_vector(above & ~adj[a2] & ~bit(a2))) {
        for (int b2 : detail::to_vector(adj[b1] & above & ~adj[a1] & ~bit(a2))) {
          const Mask seed = bit(a1) | bit(b1);
          Mask v1 = close_side(adj, all, a2, b2, seed);
          if (!v1) continue;
          if (popcount(v1) == 2) {
            v1 = 0;
            const Mask others = all & ~(seed | bit(a2) | bit(b2));
            for (int z : detail::to_vector(others)) {
              const Mask grown = close_side(adj, all, a2, b2, seed | bit(z));
              if (grown && accept(grown)) {
                v1 = grown;
                break;
              }
            }
            if (!v1) continue;
          }
          if (!accept(v1)) continue;
          const Mask v2 = all & ~v1;
          TwoJoin tj{detail::to_set(n, v1),           detail::to_set(n, v2),
                     detail::to_set(n, adj[a2] & v1), detail::to_set(n, adj[b2] & v1),
                     detail::to_set(n, adj[a1] & v2), detail::to_set(n, adj[b1] & v2)};
          tj = canonical_two_join(std::move(tj));
          if (!is_two_join(g, tj)) bad_witness(g, "find_two_join");
          return tj;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_two_join(const Graph& g, const TwoJoin& tj) {
  if (!is_partition(g, {&tj.V1, &tj.V2})) return false;
  if (tj.V1.size() < 3 || tj.V2.size() < 3) return false;
  for (const VertexSet* s : {&tj.A1, &tj.B1, &tj.A2, &tj.B2}) {
    if (s->universe() != g.order() || s->empty()) return false;
  }
  if (!tj.A1.is_subset_of(tj.V1) || !tj.B1.is_subset_of(tj.V1) || tj.A1.intersects(tj.B1)) return false;
  if (!tj.A2.is_subset_of(tj.V2) || !tj.B2.is_subset_of(tj.V2) || tj.A2.intersects(tj.B2)) return false;
  for (int x : tj.V1) {
    for (int y : tj.V2) {
      const bool wanted = (tj.A1.contains(x) && tj.A2.contains(y)) || (tj.B1.contains(x) && tj.B2.contains(y));
      if (g.adjacent(x, y) != wanted) return false;
    }
  }
  return true;
}

// --- 6-join ---------------------------------------------------------------

namespace {

// Labels 0..3 are X1..X4 and 4..7 are Y1..Y4. The 6-hole runs
// x1 y1 x2 y2 x3 y3.
constexpr bool kCross[4][4] = {
    {true, false, true, false},
    {true, true, false, false},
    {false, true, true, false},
    {false, false, false, false},
};

bool compatible(int p, int q, bool adjacent) {
  const bool px = p < 4;
  const bool qx = q < 4;
  if (px == qx) {
    const int i = p % 4;
    const int j = q % 4;
    return !(i < 3 && j < 3 && i != j && adjacent);
  }
  const int i = px ? p : q;
  const int j = (px ? q : p) - 4;
  return adjacent == kCross[i][j];
}

class SixJoinSearch {
 public:
  SixJoinSearch(const Graph& g, const std::vector<int>& labeled) : g_(g), label_(g.order(), -1) {
    for (int k = 0; k < 6; ++k) label_[labeled[k]] = (k % 2 == 0) ? k / 2 : 4 + k / 2;
    for (int v = 0; v < g.order(); ++v) {
      if (label_[v] == -1) free_.push_back(v);
    }
  }

  bool run() {
    domains_.clear();
    for (int w : free_) {
      std::vector<int> dom;
      for (int p = 0; p < 8; ++p) {
        bool ok = true;
        for (int h = 0; h < g_.order() && ok; ++h) {
          if (label_[h] != -1) ok = compatible(p, label_[h], g_.adjacent(w, h));
        }
        if (ok) dom.push_back(p);
      }
      if (dom.empty()) return false;
      domains_.push_back(std::move(dom));
    }
    return assign(0, false, false);
  }

  SixJoin result() const {
    SixJoin sj;
    for (int k = 0; k < 4; ++k) {
      sj.X[k] = g_.empty_set();
      sj.Y[k] = g_.empty_set();
    }
    for (int v = 0; v < g_.order(); ++v) {
      const int p = label_[v];
      (p < 4 ? sj.X[p] : sj.Y[p - 4]).insert(v);
    }
    return sj;
  }

 private:
  bool assign(std::size_t idx, bool have_x4, bool have_y4) {
    if (idx == free_.size()) return have_x4 && have_y4;
    const int w = free_[idx];
    for (int p : domains_[idx]) {
      bool ok = true;
      for (std::size_t k = 0; k < idx && ok; ++k) {
        const int z = free_[k];
        ok = compatible(p, label_[z], g_.adjacent(w, z));
      }
      if (!ok) continue;
      label_[w] = p;
      if (assign(idx + 1, have_x4 || p == 3, have_y4 || p == 7)) return true;
      label_[w] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> label_;
  std::vector<int> free_;
  std::vector<std::vector<int>> domains_;
};

}  // namespace

std::optional<SixJoin> find_six_join(const Graph& g, const Limits& limits) {
  detail::require_at_most(g, limits.six_join, "find_six_join");
  if (g.order() < 8) return std::nullopt;
  std::optional<SixJoin> found;
  for_each_hole(g, [&](const Path& hole) {
    if (hole.vertices.size() != 6) return false;
    for (int start = 0; start < 6 && !found; ++start) {
      for (int dir : {1, -1}) {
        std::vector<int> labeled(6);
        for (int k = 0; k < 6; ++k) labeled[k] = hole.vertices[((start + dir * k) % 6 + 6) % 6];
        SixJoinSearch search(g, labeled);
        if (search.run()) {
          found = search.result();
          break;
        }
      }
    }
    return found.has_value();
  });
  if (found && !is_six_join(g, *found)) bad_witness(g, "find_six_join");
  return found;
}

bool is_six_join(const Graph& g, const SixJoin& sj) {
  if (!is_partition(g, {&sj.X[0], &sj.X[1], &sj.X[2], &sj.X[3], &sj.Y[0], &sj.Y[1], &sj.Y[2], &sj.Y[3]})) {
    return false;
  }
  for (int k = 0; k < 4; ++k) {
    if (sj.X[k].empty() || sj.Y[k].empty()) return false;
  }
  const VertexSet xs = sj.X[0] | sj.X[1] | sj.X[2] | sj.X[3];
  const VertexSet ys = sj.Y[0] | sj.Y[1] | sj.Y[2] | sj.Y[3];
  if (!anticomplete_to(g, sj.X[3], ys) || !anticomplete_to(g, sj.Y[3], xs)) return false;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!anticomplete_to(g, sj.X[i], sj.X[j]) || !anticomplete_to(g, sj.Y[i], sj.Y[j])) return false;
    }
  }
  // Each X_i-Y_j pair is complete or anticomplete, and the complete pairs
  // form a 6-cycle on the nine index pairs, so any choice of representatives
  // induces a 6-hole.
  bool complete[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const bool c = complete_to(g, sj.X[i], sj.Y[j]);
      if (!c && !anticomplete_to(g, sj.X[i], sj.Y[j])) return false;
      complete[i][j] = c;
    }
  }
  for (int i = 0; i < 3; ++i) {
    int row = 0;
    int col = 0;
    for (int j = 0; j < 3; ++j) {
      row += complete[i][j];
      col += complete[j][i];
    }
    if (row != 2 || col != 2) return false;
  }
  return true;
}

// --- skew partitions ------------------------------------------------------

namespace {

std::vector<Mask> split_components(const std::vector<Mask>& adj, Mask within) {
  std::vector<Mask> comps;
  while (within) {
    const Mask c = detail::reach(adj, within, bit(lowest(within)));
    comps.push_back(c);
    within &= ~c;
  }
  return comps;
}

}  // namespace

void for_each_skew_partition(const Graph& g, const std::function<bool(const SkewPartition&)>& visit,
                             const Limits& limits) {
  detail::require_at_most(g, limits.skew_partition, "for_each_skew_partition");
  const int n = g.order();
  const auto adj = detail::masks_of(g, "for_each_skew_partition");
  const auto co = detail::complement_masks(adj);
  const Mask all = detail::low_bits(n);
  for (Mask s = 1; s < all; ++s) {
    if (popcount(s) < 2 || popcount(all & ~s) < 2) continue;
    const auto cuts = split_components(co, s);
    if (cuts.size() < 2) continue;
    const auto sides = split_components(adj, all & ~s);
    if (sides.size() < 2) continue;
    const Mask cut_splits = (Mask{1} << (cuts.size() - 1)) - 1;
    const Mask side_splits = (Mask{1} << (sides.size() - 1)) - 1;
    for (Mask cs = 0; cs < cut_splits; ++cs) {
      Mask a = cuts[0];
      detail::for_each_bit(cs, [&](int k) { a |= cuts[k + 1]; });
      for (Mask ds = 0; ds < side_splits; ++ds) {
        Mask c = sides[0];
        detail::for_each_bit(ds, [&](int k) { c |= sides[k + 1]; });
        const SkewPartition sp{detail::to_set(n, a), detail::to_set(n, s & ~a), detail::to_set(n, c),
                               detail::to_set(n, all & ~s & ~c)};
        if (visit(sp)) return;
      }
    }
  }
}

std::optional<SkewPartition> find_skew_partition(const Graph& g, const Limits& limits) {
  detail::require_at_most(g, limits.skew_partition, "find_skew_partition");
  const int n = g.order();
  const auto adj = detail::masks_of(g, "find_skew_partition");
  const auto co = detail::complement_masks(adj);
  const Mask all = detail::low_bits(n);
  for (Mask s = 1; s < all; ++s) {
    if (popcount(s) < 2 || popcount(all & ~s) < 2) continue;
    const Mask a = detail::reach(co, s, bit(lowest(s)));
    if (a == s) continue;
    const Mask rest = all & ~s;
    const Mask c = detail::reach(adj, rest, bit(lowest(rest)));
    if (c == rest) continue;
    SkewPartition sp{detail::to_set(n, a), detail::to_set(n, s & ~a), detail::to_set(n, c),
                     detail::to_set(n, rest & ~c)};
    if (!is_skew_partition(g, sp)) bad_witness(g, "find_skew_partition");
    return sp;
  }
  return std::nullopt;
}

bool is_skew_partition(const Graph& g, const SkewPartition& sp) {
  if (!is_partition(g, {&sp.A, &sp.B, &sp.C, &sp.D})) return false;
  if (sp.A.empty() || sp.B.empty() || sp.C.empty() || sp.D.empty()) return false;
  return complete_to(g, sp.A, sp.B) && anticomplete_to(g, sp.C, sp.D);
}

bool is_t_cutset(const Graph& g, const SkewPartition& sp, int u, int v) {
  if (!is_skew_partition(g, sp) || !sp.C.contains(u) || !sp.D.contains(v)) return false;
  return sp.A.is_subset_of(g.neighbors(u) & g.neighbors(v));
}

bool is_u_cutset(const Graph& g, const SkewPartition& sp, int u, int v) {
  if (!is_skew_partition(g, sp) || u == v || !sp.C.contains(u) || !sp.C.contains(v)) return false;
  return sp.A.is_subset_of(g.neighbors(u)) && sp.B.is_subset_of(g.neighbors(v));
}

std::vector<CutsetKind> classify_cutset(const Graph& g, const SkewPartition& sp) {
  if (!is_skew_partition(g, sp)) throw InvalidInput("classify_cutset: not a skew partition of the graph");
  std::vector<CutsetKind> out;
  const VertexSet cut = sp.A | sp.B;
  for (int x : cut) {
    VertexSet others = cut;
    others.erase(x);
    if (others.is_subset_of(g.neighbors(x))) out.push_back({CutsetTag::star, x, -1});
  }
  out.push_back({CutsetTag::double_star, sp.A.first(), sp.B.first()});

  // The definitions name one orientation; the partition is symmetric in
  // A/B and in C/D, so every orientation is tried.
  const SkewPartition orientations[4] = {
      sp, {sp.B, sp.A, sp.C, sp.D}, {sp.A, sp.B, sp.D, sp.C}, {sp.B, sp.A, sp.D, sp.C}};
  bool special = out.size() > 1;
  auto add = [&](CutsetKind k) {
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    special = true;
  };
  for (const auto& o : orientations) {
    for (int u : o.C) {
      for (int v : o.D) {
        if (is_t_cutset(g, o, u, v)) add({CutsetTag::t_cutset, std::min(u, v), std::max(u, v)});
      }
    }
  }
  for (const auto& o : orientations) {
    for (int u : o.C) {
      for (int v : o.C) {
        if (is_u_cutset(g, o, u, v)) add({CutsetTag::u_cutset, u, v});
      }
    }
  }
  if (!special) out.push_back({CutsetTag::plain_skew, -1, -1});
  return out;
}

namespace {

std::optional<std::pair<SkewPartition, CutsetKind>> find_refinement(const Graph& g, CutsetTag tag,
                                                                    const Limits& limits) {
  std::optional<std::pair<SkewPartition, CutsetKind>> found;
  for_each_skew_partition(
      g,
      [&](const SkewPartition& sp) {
        for (const auto& k : classify_cutset(g, sp)) {
          if (k.tag != tag) continue;
          // Report the orientation in which (u, v) satisfies the literal definition.
          const SkewPartition orientations[4] = {
              sp, {sp.B, sp.A, sp.C, sp.D}, {sp.A, sp.B, sp.D, sp.C}, {sp.B, sp.A, sp.D, sp.C}};
          for (const auto& o : orientations) {
            for (auto [u, v] : {std::pair{k.u, k.v}, std::pair{k.v, k.u}}) {
              const bool ok = tag == CutsetTag::t_cutset ? is_t_cutset(g, o, u, v) : is_u_cutset(g, o, u, v);
              if (ok) {
                found.emplace(o, CutsetKind{tag, u, v});
                return true;
              }
            }
          }
        }
        return false;
      },
      limits);
  return found;
}

}  // namespace

std::optional<std::pair<SkewPartition, CutsetKind>> find_t_cutset(const Graph& g, const Limits& limits) {
  return find_refinement(g, CutsetTag::t_cutset, limits);
}

std::optional<std::pair<SkewPartition, CutsetKind>> find_u_cutset(const Graph& g, const Limits& limits) {
  return find_refinement(g, CutsetTag::u_cutset, limits);
}

// --- homogeneous pairs ----------------------------------------------------

std::optional<HomogeneousPair> find_homogeneous_pair(const Graph& g, const Limits& limits, bool allow_empty_part) {
  detail::require_at_most(g, limits.homogeneous_pair, "find_homogeneous_pair");
  const int n = g.order();
  if (n < 5) return std::nullopt;
  const auto adj = detail::masks_of(g, "find_homogeneous_pair");
  const Mask all = detail::low_bits(n);
  for (Mask a = 1; a < all; ++a) {
    if (popcount(a) < 3 || popcount(all & ~a) < 2) continue;
    // Every trace N(b) & A other than 0 and A must be A1 or A2.
    Mask part = 0;
    bool ok = true;
    detail::for_each_bit(all & ~a, [&](int b) {
      const Mask t = adj[b] & a;
      if (!ok || t == 0 || t == a) return;
      if (part == 0) {
        part = t;
      } else if (t != part && t != (a & ~part)) {
        ok = false;
      }
    });
    if (!ok) continue;
    Mask a1;
    if (part == 0) {
      a1 = allow_empty_part ? a : bit(lowest(a));
    } else {
      a1 = (part & bit(lowest(a))) ? part : (a & ~part);
    }
    HomogeneousPair hp{detail::to_set(n, a1), detail::to_set(n, a & ~a1), detail::to_set(n, all & ~a)};
    if (!is_homogeneous_pair(g, hp)) bad_witness(g, "find_homogeneous_pair");
    return hp;
  }
  return std::nullopt;
}

bool is_homogeneous_pair(const Graph& g, const HomogeneousPair& hp) {
  if (!is_partition(g, {&hp.A1, &hp.A2, &hp.B})) return false;
  if (hp.A1.size() + hp.A2.size() < 3 || hp.B.size() < 2) return false;
  for (int b : hp.B) {
    for (const VertexSet* part : {&hp.A1, &hp.A2}) {
      const VertexSet seen = g.neighbors(b) & *part;
      if (!seen.empty() && seen != *part) return false;
    }
  }
  return true;
}

// --- star and double star cutsets -----------------------------------------

namespace {

bool separated(const std::vector<Mask>& adj, Mask all, Mask cut, int x, int y) {
  return !(detail::reach(adj, all & ~cut, bit(x)) & bit(y));
}

/// Drops vertices of `cut` (other than `keep`) in increasing order while x
/// and y stay separated.
Mask shrink(const std::vector<Mask>& adj, Mask all, Mask cut, Mask keep, int x, int y) {
  detail::for_each_bit(cut & ~keep, [&](int s) {
    if (separated(adj, all, cut & ~bit(s), x, y)) cut &= ~bit(s);
  });
  return cut;
}

struct Best {
  Mask cut = 0;
  int u = -1;
  int v = -1;
  bool found = false;

  void offer(Mask c, int cu, int cv) {
    if (!found || popcount(c) < popcount(cut)) {
      cut = c;
      u = cu;
      v = cv;
      found = true;
    }
  }
};

}  // namespace

std::optional<StarCutset> find_star_cutset(const Graph& g) {
  const int n = g.order();
  const auto adj = detail::masks_of(g, "find_star_cutset");
  const Mask all = detail::low_bits(n);
  Best best;
  for (int c = 0; c < n; ++c) {
    const Mask closed = adj[c] | bit(c);
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (x == c || y == c || (adj[x] & bit(y))) continue;
        const Mask cut = closed & ~bit(x) & ~bit(y);
        if (!separated(adj, all, cut, x, y)) continue;
        best.offer(shrink(adj, all, cut, bit(c), x, y), c, -1);
      }
    }
  }
  if (!best.found) return std::nullopt;
  StarCutset out{detail::to_set(n, best.cut), best.u};
  if (!is_star_cutset(g, out.cutset, out.center)) bad_witness(g, "find_star_cutset");
  return out;
}

std::optional<DoubleStarCutset> find_double_star_cutset(const Graph& g) {
  const int n = g.order();
  const auto adj = detail::masks_of(g, "find_double_star_cutset");
  const Mask all = detail::low_bits(n);
  Best best;
  for (auto [u, v] : g.edges()) {
    const Mask ends = bit(u) | bit(v);
    const Mask closed = adj[u] | adj[v] | ends;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if ((ends & (bit(x) | bit(y))) || (adj[x] & bit(y))) continue;
        const Mask cut = closed & ~bit(x) & ~bit(y);
        if (!separated(adj, all, cut, x, y)) continue;
        best.offer(shrink(adj, all, cut, ends, x, y), u, v);
      }
    }
  }
  if (!best.found) return std::nullopt;
  DoubleStarCutset out{detail::to_set(n, best.cut), best.u, best.v};
  if (!is_double_star_cutset(g, out.cutset, out.u, out.v)) bad_witness(g, "find_double_star_cutset");
  return out;
}

bool is_star_cutset(const Graph& g, const VertexSet& s, int center) {
  if (s.universe() != g.order() || !s.contains(center)) return false;
  VertexSet closed = g.neighbors(center);
  closed.insert(center);
  return s.is_subset_of(closed) && components_after_removal(g, s) >= 2;
}

bool is_double_star_cutset(const Graph& g, const VertexSet& s, int u, int v) {
  if (s.universe() != g.order() || u == v || !s.contains(u) || !s.contains(v) || !g.adjacent(u, v)) return false;
  VertexSet closed = g.neighbors(u) | g.neighbors(v);
  closed.insert(u);
  closed.insert(v);
  return s.is_subset_of(closed) && components_after_removal(g, s) >= 2;
}

}  // namespace berge
