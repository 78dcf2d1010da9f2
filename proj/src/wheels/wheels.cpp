#include "berge/wheels.hpp"

#include <algorithm>
#include <functional>

#include "berge/errors.hpp"
#include "berge/graph6.hpp"
#include "berge/holes.hpp"
#include "bits.hpp"

namespace berge {

using detail::Mask;
using detail::bit;
using detail::popcount;

std::string_view to_string(WheelKind kind) {
  switch (kind) {
    case WheelKind::line:
      return "line";
    case WheelKind::twin:
      return "twin";
    case WheelKind::universal:
      return "universal";
    case WheelKind::triangle_free:
      return "triangle_free";
    case WheelKind::proper:
      return "proper";
  }
  return "unknown";
}

Wheel classify_wheel(const Graph& g, const Path& hole, int center) {
  if (!is_hole(g, hole)) throw InvalidInput("classify_wheel: not a hole");
  if (center < 0 || center >= g.order()) throw InvalidInput("classify_wheel: center out of range");
  const auto& h = hole.vertices;
  if (std::find(h.begin(), h.end(), center) != h.end()) throw InvalidInput("classify_wheel: center lies on the hole");

  Wheel w{hole, center, {}, 0, WheelKind::proper};
  const int len = static_cast<int>(h.size());
  std::vector<int> triangle_edges;  // start index of each triangle's hole edge
  for (int i = 0; i < len; ++i) {
    if (g.adjacent(center, h[i])) w.spokes.push_back(h[i]);
    if (g.adjacent(center, h[i]) && g.adjacent(center, h[(i + 1) % len])) {
      ++w.triangles;
      triangle_edges.push_back(i);
    }
  }
  if (w.arity() < 3) throw InvalidInput("classify_wheel: center has fewer than three neighbours on the hole");

  const int k = w.arity();
  const bool universal = k == len;
  bool line = false;
  if (k == 4 && w.triangles == 2) {
    // Two triangles meet only in the center when their hole edges share no end.
    const int i = triangle_edges[0];
    const int j = triangle_edges[1];
    line = (j - i) % len != 1 && (i - j + len) % len != 1;
  }
  const bool twin = k == 3 && w.triangles == 2;
  const bool triangle_free = w.triangles == 0;
  const int hits = universal + line + twin + triangle_free;
  if (hits > 1) {
    throw InternalInconsistency("classify_wheel: wheel matches several kinds [graph6 " + to_graph6(g) + "]");
  }
  if (universal) w.kind = WheelKind::universal;
  if (line) w.kind = WheelKind::line;
  if (twin) w.kind = WheelKind::twin;
  if (triangle_free) w.kind = WheelKind::triangle_free;
  return w;
}

std::vector<Wheel> find_wheels(const Graph& g, const std::vector<WheelKind>& kinds, const Limits& limits) {
  detail::require_at_most(g, limits.wheel, "find_wheels");
  std::vector<Wheel> out;
  for_each_hole(g, [&](const Path& hole) {
    VertexSet on_hole(g.order(), std::span<const int>(hole.vertices));
    for (int v = 0; v < g.order(); ++v) {
      if (on_hole.contains(v) || (g.neighbors(v) & on_hole).size() < 3) continue;
      Wheel w = classify_wheel(g, hole, v);
      if (std::find(kinds.begin(), kinds.end(), w.kind) != kinds.end()) out.push_back(std::move(w));
    }
    return false;
  });
  return out;
}

namespace {

class StretcherSearch {
 public:
  explicit StretcherSearch(const Graph& g) : g_(g), adj_(detail::masks_of(g, "find_stretcher")) {}

  std::optional<Stretcher> run() {
    const int n = g_.order();
    std::vector<std::array<int, 3>> triangles;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (!(adj_[x] & bit(y))) continue;
        for (int z = y + 1; z < n; ++z) {
          if ((adj_[x] & bit(z)) && (adj_[y] & bit(z))) triangles.push_back({x, y, z});
        }
      }
    }
    for (std::size_t i = 0; i < triangles.size(); ++i) {
      for (std::size_t j = i + 1; j < triangles.size(); ++j) {
        const Mask ta = tri_mask(triangles[i]);
        const Mask tb = tri_mask(triangles[j]);
        if (ta & tb) continue;
        std::array<int, 3> b = triangles[j];
        do {
          if (try_pairing(triangles[i], b)) return found_;
        } while (std::next_permutation(b.begin(), b.end()));
      }
    }
    return std::nullopt;
  }

 private:
  static Mask tri_mask(const std::array<int, 3>& t) { return bit(t[0]) | bit(t[1]) | bit(t[2]); }

  bool try_pairing(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j && (adj_[a[i]] & bit(b[j]))) return false;
      }
    }
    a_ = a;
    b_ = b;
    const Mask ends = tri_mask(a) | tri_mask(b);
    return build(0, detail::low_bits(g_.order()) & ~ends, false);
  }

  /// Builds paths[i..2]; `free` holds vertices still allowed as interior
  /// vertices.
  bool build(int i, Mask free, bool long_seen) {
    if (i == 3) {
      if (!long_seen) return false;
      found_ = Stretcher{a_, b_, paths_};
      return true;
    }
    Mask interior = free;
    for (int j = 0; j < 3; ++j) {
      if (j != i) interior &= ~adj_[a_[j]] & ~adj_[b_[j]];
    }
    std::vector<int> path{a_[i]};
    std::function<bool(Mask)> grow = [&](Mask on_path) -> bool {
      const int last = path.back();
      if (adj_[last] & bit(b_[i])) {
        // A chordless path has to stop as soon as it can reach b_i.
        path.push_back(b_[i]);
        paths_[i] = Path{path};
        const Mask vertices = on_path | bit(b_[i]);
        const Mask interior_vertices = vertices & ~bit(a_[i]) & ~bit(b_[i]);
        Mask blocked = vertices;
        detail::for_each_bit(interior_vertices, [&](int v) { blocked |= adj_[v]; });
        const bool ok = build(i + 1, free & ~blocked, long_seen || path.size() > 2);
        path.pop_back();
        return ok;
      }
      Mask next = adj_[last] & interior & ~on_path;
      while (next) {
        const int w = detail::lowest(next);
        next &= next - 1;
        if (adj_[w] & (on_path & ~bit(last))) continue;
        path.push_back(w);
        if (grow(on_path | bit(w))) return true;
        path.pop_back();
      }
      return false;
    };
    return grow(bit(a_[i]));
  }

  const Graph& g_;
  std::vector<Mask> adj_;
  std::array<int, 3> a_{};
  std::array<int, 3> b_{};
  std::array<Path, 3> paths_;
  std::optional<Stretcher> found_;
};

}  // namespace

std::optional<Stretcher> find_stretcher(const Graph& g, const Limits& limits) {
  detail::require_at_most(g, limits.stretcher, "find_stretcher");
  auto s = StretcherSearch(g).run();
  if (s && !is_stretcher(g, *s)) {
    throw InternalInconsistency("find_stretcher: witness failed validation [graph6 " + to_graph6(g) + "]");
  }
  return s;
}

bool is_stretcher(const Graph& g, const Stretcher& s) {
  const int n = g.order();
  auto in_range = [&](int v) { return v >= 0 && v < n; };
  for (const auto* t : {&s.a, &s.b}) {
    for (int v : *t) {
      if (!in_range(v)) return false;
    }
    if (!g.adjacent((*t)[0], (*t)[1]) || !g.adjacent((*t)[0], (*t)[2]) || !g.adjacent((*t)[1], (*t)[2])) {
      return false;
    }
  }
  std::vector<int> owner(n, -1);
  bool long_path = false;
  for (int i = 0; i < 3; ++i) {
    const auto& p = s.paths[i].vertices;
    if (p.size() < 2 || p.front() != s.a[i] || p.back() != s.b[i]) return false;
    for (int v : p) {
      if (!in_range(v) || owner[v] != -1) return false;
      owner[v] = i;
    }
    if (!is_chordless_path(g, s.paths[i])) return false;
    if (p.size() > 2) long_path = true;
  }
  if (!long_path) return false;
  auto in_triangle = [](const std::array<int, 3>& t, int v) { return std::find(t.begin(), t.end(), v) != t.end(); };
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (owner[x] == -1 || owner[y] == -1 || owner[x] == owner[y]) continue;
      const bool triangle_edge =
          (in_triangle(s.a, x) && in_triangle(s.a, y)) || (in_triangle(s.b, x) && in_triangle(s.b, y));
      if (g.adjacent(x, y) != triangle_edge) return false;
    }
  }
  return true;
}

}  // namespace berge
