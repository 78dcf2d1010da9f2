#include <doctest.h>

#include <random>

#include "berge/errors.hpp"
#include "berge/families.hpp"
#include "berge/holes.hpp"
#include "berge/ops.hpp"
#include "berge/wheels.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

/// Hole 0..len-1 plus a center `len` adjacent to the listed hole vertices.
Graph wheel_on(int len, std::initializer_list<int> spokes) {
  Graph g = families::cycle(len);
  g.add_vertex();
  for (int s : spokes) g.add_edge(len, s);
  return g;
}

Path cycle_path(int len) {
  Path p;
  for (int i = 0; i < len; ++i) p.vertices.push_back(i);
  return p;
}

Graph subdivided_k4() {
  // Original vertices 0..3, one subdivision vertex per edge.
  Graph g(10);
  int next = 4;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) {
      g.add_edge(u, next);
      g.add_edge(next, v);
      ++next;
    }
  }
  return g;
}

}  // namespace

TEST_CASE("wheel classification") {
  CHECK(classify_wheel(wheel_on(4, {0, 1, 2, 3}), cycle_path(4), 4).kind == WheelKind::universal);
  const Wheel p = classify_wheel(wheel_on(6, {0, 1, 3}), cycle_path(6), 6);
  CHECK(p.kind == WheelKind::proper);
  CHECK(p.triangles == 1);
  const Wheel t = classify_wheel(wheel_on(5, {0, 1, 2}), cycle_path(5), 5);
  CHECK(t.kind == WheelKind::twin);
  CHECK(t.arity() == 3);
  const Wheel l = classify_wheel(wheel_on(6, {0, 1, 3, 4}), cycle_path(6), 6);
  CHECK(l.kind == WheelKind::line);
  CHECK(l.arity() == 4);
  CHECK(classify_wheel(wheel_on(6, {0, 2, 4}), cycle_path(6), 6).kind == WheelKind::triangle_free);
  CHECK_THROWS_AS(classify_wheel(wheel_on(6, {0, 3}), cycle_path(6), 6), InvalidInput);
  CHECK_THROWS_AS(classify_wheel(families::complete(5), cycle_path(4), 4), InvalidInput);
}

TEST_CASE("wheel search examples") {
  CHECK(find_wheels(families::cycle(5)).empty());
  const auto w5 = find_wheels(families::wheel(5));
  REQUIRE(w5.size() == 1);
  CHECK(w5[0].kind == WheelKind::universal);
  CHECK(w5[0].center == 0);
  // Regression values from the exhaustive scan: every edge of the subdivision
  // meets only three others, so no center reaches four spokes.
  const Graph l = line_graph(subdivided_k4());
  CHECK(find_wheels(l, {WheelKind::line}).empty());
  CHECK(find_wheels(l).size() == 0);
  CHECK(all_holes(l).size() == 7);
  CHECK(oracle::holes(oracle::Mat(l)).size() == 7);
  Limits tight;
  tight.wheel = 10;
  CHECK_THROWS_AS(find_wheels(l, {WheelKind::line}, tight), ResourceLimit);
}

TEST_CASE("wheels match a brute-force scan and kinds are exclusive") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const int n = 5 + t % 5;
    const Graph g = oracle::random_graph(n, 0.3 + 0.1 * (t % 4), rng);
    const oracle::Mat m(g);
    std::size_t expected = 0;
    for (oracle::Mask h : oracle::holes(m)) {
      for (int v = 0; v < n; ++v) {
        if (h >> v & 1) continue;
        int spokes = 0;
        for (int x : oracle::members(h)) spokes += m.a[v][x];
        expected += spokes >= 3;
      }
    }
    const auto wheels = find_wheels(g);
    CHECK(wheels.size() == expected);
    for (const auto& w : wheels) {
      CHECK(is_hole(g, w.hole));
      const int hits = (w.kind == WheelKind::line) + (w.kind == WheelKind::twin) + (w.kind == WheelKind::universal) +
                       (w.kind == WheelKind::triangle_free) + (w.kind == WheelKind::proper);
      CHECK(hits == 1);
      if (w.kind == WheelKind::line) CHECK(w.arity() == 4);
      if (w.kind == WheelKind::twin) CHECK(w.arity() == 3);
    }
  }
}

TEST_CASE("stretcher examples") {
  const Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(find_stretcher(prism));
  // a = 0,1,2; b = 3,4,5; path 0-6-3 and single edges 1-4, 2-5.
  const Graph s7(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 6}, {6, 3}, {1, 4}, {2, 5}});
  const auto st = find_stretcher(s7);
  REQUIRE(st);
  CHECK(is_stretcher(s7, *st));
  CHECK_FALSE(find_stretcher(families::cycle(7)));
}

TEST_CASE("stretchers keep only path and triangle edges") {
  std::mt19937_64 rng(42);
  int found = 0;
  for (int t = 0; t < 400; ++t) {
    const Graph g = oracle::random_graph(7 + t % 4, 0.35, rng);
    const auto st = find_stretcher(g);
    if (!st) continue;
    ++found;
    CHECK(is_stretcher(g, *st));
    VertexSet on(g.order());
    int path_edges = 0;
    for (const auto& p : st->paths) {
      for (int v : p.vertices) on.insert(v);
      path_edges += p.length();
    }
    CHECK(induced_subgraph(g, on).graph.num_edges() == path_edges + 6);
  }
  CHECK(found > 5);
}
