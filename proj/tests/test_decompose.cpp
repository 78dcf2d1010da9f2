#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "berge/decompose.hpp"
#include "berge/errors.hpp"
#include "berge/families.hpp"
#include "berge/generate.hpp"
#include "berge/holes.hpp"
#include "berge/ops.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

Graph graph_of(int n, std::initializer_list<Edge> edges) { return Graph(n, edges); }

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 4 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

TwoJoinSide side(Graph g, std::initializer_list<int> a, std::initializer_list<int> b) {
  const int n = g.order();
  return TwoJoinSide{std::move(g), VertexSet(n, a), VertexSet(n, b)};
}

BlockColoring color_side(const Graph& g, const TwoJoin& tj, int side) {
  const auto blocks = two_join_blocks(g, tj);
  const int omega = clique_number(g);
  return block_coloring(side == 1 ? blocks.g1 : blocks.g2, omega);
}

}  // namespace

TEST_CASE("blocks of holes are holes of the same parity") {
  for (int n = 6; n <= 11; ++n) {
    const Graph g = families::cycle(n);
    const auto tj = find_two_join(g);
    REQUIRE(tj);
    const auto blocks = two_join_blocks(g, *tj);
    for (const Block* b : {&blocks.g1, &blocks.g2}) {
      CHECK(b->marker == MarkerKind::path);
      CHECK(is_cycle_graph(b->graph));
      CHECK(b->graph.order() % 2 == n % 2);
      CHECK(b->graph.order() == n);
    }
    CHECK(blocks.parities_match() == (n % 2 == 0));
  }
}

TEST_CASE("disconnected other side gives a pair marker") {
  // side 2 is two disjoint edges p-q and r-s with A2 = {p}, B2 = {s}
  TwoJoin tj;
  const Graph g = glue_two_join(side(families::path(3), {0}, {2}),
                                side(graph_of(4, {{0, 1}, {2, 3}}), {0}, {3}), &tj);
  const auto blocks = two_join_blocks(g, tj);
  CHECK(blocks.g1.marker == MarkerKind::pair);
  CHECK(blocks.g1.graph.order() == 3 + 2);
  CHECK(blocks.g2.marker == MarkerKind::path);
  CHECK_FALSE(blocks.parity());
}

TEST_CASE("intersection counts on small compositions") {
  SUBCASE("odd, a = b = 1, omega = 3") {
    TwoJoin tj;
    const Graph g = glue_two_join(side(graph_of(3, {{0, 1}, {0, 2}}), {0}, {1}),
                                  side(families::complete(3), {0}, {1}), &tj);
    const auto c = color_side(g, tj, 1);
    CHECK(c.omega == 3);
    CHECK(c.a == 1);
    CHECK(c.b == 1);
    REQUIRE(c.parity);
    CHECK(*c.parity == Parity::odd);
    CHECK(c.common == 0);
    CHECK(c.expected_common() == 0);
  }
  SUBCASE("odd, a = b = 2, omega = 3") {
    // A1 = {0, 1} and B1 = {2, 3} are edges, 0-2 joins them
    TwoJoin tj;
    const Graph g = glue_two_join(side(graph_of(4, {{0, 1}, {2, 3}, {0, 2}}), {0, 1}, {2, 3}),
                                  side(graph_of(3, {{0, 1}, {0, 2}}), {0}, {1}), &tj);
    const auto c = color_side(g, tj, 1);
    CHECK(c.omega == 3);
    CHECK(c.a == 2);
    CHECK(c.b == 2);
    REQUIRE(c.parity);
    CHECK(*c.parity == Parity::odd);
    CHECK(c.common == 1);
  }
  SUBCASE("even, a = 1, b = 2, omega = 3") {
    // x=0, m=1, y1=2, y2=3 with m complete to {y1, y2}; side 2 is a 3-path
    TwoJoin tj;
    const Graph g = glue_two_join(side(graph_of(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}), {0}, {2, 3}),
                                  side(families::path(3), {0}, {2}), &tj);
    CHECK(is_perfect(g).perfect);
    const auto c = color_side(g, tj, 1);
    CHECK(c.omega == 3);
    CHECK(c.a == 1);
    CHECK(c.b == 2);
    REQUIRE(c.parity);
    CHECK(*c.parity == Parity::even);
    CHECK(c.common == 1);
  }
}

TEST_CASE("replicated block sizes") {
  const Graph g = families::cycle(8);
  const auto tj = find_two_join(g);
  REQUIRE(tj);
  const auto blocks = two_join_blocks(g, *tj);
  const Block& b = blocks.g1;
  const int side = b.side_vertices.size();
  for (int omega : {2, 3, 4}) {
    const auto h = replicated_block(b, omega, 1, 1);
    CHECK(h.graph.order() == static_cast<int>(h.origin.size()));
    CHECK(h.graph.order() >= side + b.path_edges());
    CHECK(clique_number(h.graph) <= omega);
  }
}

TEST_CASE("combining the two sides of C6") {
  const Graph g = families::cycle(6);
  const auto tj = find_two_join(g);
  REQUIRE(tj);
  const auto blocks = two_join_blocks(g, *tj);
  const auto c1 = block_coloring(blocks.g1, 2);
  const auto c2 = block_coloring(blocks.g2, 2);
  const auto combined = combine_colorings(g, *tj, blocks, c1, c2, 2);
  CHECK(combined.coloring.is_proper(g));
  CHECK(combined.coloring.num_colors == 2);
}

TEST_CASE("combining blocks with different parities is rejected") {
  // sides joined by paths of length 2 and 1 give an odd hole
  TwoJoin tj;
  const Graph g = glue_two_join(side(families::path(3), {0}, {2}),
                                side(graph_of(3, {{0, 1}, {0, 2}}), {0}, {1}), &tj);
  CHECK(has_odd_hole(g));
  const auto blocks = two_join_blocks(g, tj);
  CHECK_FALSE(blocks.parities_match());
  CHECK_THROWS_AS(combine_colorings(g, tj, blocks, BlockColoring{}, BlockColoring{}, 3), InvalidInput);
}

TEST_CASE("imperfect block is reported") {
  // side 1 carries a 5-hole through its A and B vertices
  TwoJoin tj;
  Graph s1 = families::cycle(5);
  s1.add_vertex();
  s1.add_edge(5, 0);
  const Graph g = glue_two_join(side(s1, {5}, {2}), side(families::path(3), {0}, {2}), &tj);
  const auto blocks = two_join_blocks(g, tj);
  CHECK_THROWS_AS(block_coloring(blocks.g2, clique_number(g)), InvalidInput);
}

TEST_CASE("6-join blocks") {
  const Graph g = graph_of(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {7, 1}});
  const auto sj = find_six_join(g);
  REQUIRE(sj);
  const auto [gx, gy] = six_join_blocks(g, *sj);
  int x = 0;
  int y = 0;
  for (int i = 0; i < 4; ++i) {
    x += sj->X[i].size();
    y += sj->Y[i].size();
  }
  CHECK(gx.graph.order() == x + 3);
  CHECK(gy.graph.order() == y + 3);
  for (const auto* blk : {&gx, &gy}) {
    for (int v : blk->to_parent) CHECK(v < g.order());
  }
}

TEST_CASE("perfect coloring branches") {
  SUBCASE("bipartite") {
    const auto pc = perfect_color(families::complete_bipartite(3, 4));
    CHECK(pc.tree.method == ColorMethod::basic);
    CHECK(pc.coloring.num_colors == 2);
  }
  SUBCASE("C6") {
    const auto pc = perfect_color(families::cycle(6));
    CHECK(pc.coloring.num_colors == 2);
    CHECK(pc.coloring.is_proper(families::cycle(6)));
  }
  SUBCASE("imperfect input") {
    CHECK_THROWS_AS(perfect_color(families::cycle(7)), InvalidInput);
  }
  SUBCASE("2-join and oracle branches on random perfect graphs") {
    std::mt19937_64 rng(11);
    std::set<ColorMethod> seen;
    for (int iter = 0; iter < 400; ++iter) {
      const int n = 6 + static_cast<int>(rng() % 4);
      const Graph g = oracle::random_graph(n, 0.45, rng);
      if (!oracle::perfect(oracle::Mat(g))) continue;
      const auto pc = perfect_color(g);
      CHECK(pc.coloring.is_proper(g));
      CHECK(pc.coloring.num_colors == oracle::omega(oracle::Mat(g)));
      seen.insert(pc.tree.method);
    }
    CHECK(seen.count(ColorMethod::basic));
    CHECK(seen.count(ColorMethod::oracle));
  }
}

TEST_CASE("random perfect compositions color through their blocks") {
  Rng rng(3);
  std::set<std::tuple<int, int, int, int>> triples;
  int via_two_join = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const auto pt = random_perfect_two_join(8, rng);
    REQUIRE(is_two_join(pt.graph, pt.two_join));
    const int omega = clique_number(pt.graph);
    const auto blocks = two_join_blocks(pt.graph, pt.two_join);
    REQUIRE(blocks.parities_match());
    const auto c1 = block_coloring(blocks.g1, omega);
    const auto c2 = block_coloring(blocks.g2, omega);
    for (const auto* c : {&c1, &c2}) {
      if (!c->parity) continue;
      CHECK(c->common == c->expected_common());
      triples.insert({c->a, c->b, c->omega, *c->parity == Parity::odd});
    }
    const auto combined = combine_colorings(pt.graph, pt.two_join, blocks, c1, c2, omega);
    CHECK(combined.coloring.is_proper(pt.graph));
    CHECK(combined.coloring.num_colors <= omega);
    const auto pc = perfect_color(pt.graph);
    CHECK(pc.coloring.num_colors == omega);
    if (pc.tree.method == ColorMethod::two_join) ++via_two_join;
  }
  CHECK(triples.size() > 3);
  CHECK(via_two_join > 0);
}

TEST_CASE("a 2-join composition is perfect iff both blocks are") {
  std::mt19937_64 rng(5);
  int perfect = 0;
  int imperfect = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const int n1 = 3 + static_cast<int>(rng() % 4);
    const int n2 = 3 + static_cast<int>(rng() % 4);
    const Graph g1 = oracle::random_graph(n1, 0.5, rng);
    const Graph g2 = oracle::random_graph(n2, 0.5, rng);
    const int a1 = static_cast<int>(rng() % n1);
    const int b1 = (a1 + 1 + static_cast<int>(rng() % (n1 - 1))) % n1;
    const int a2 = static_cast<int>(rng() % n2);
    const int b2 = (a2 + 1 + static_cast<int>(rng() % (n2 - 1))) % n2;
    TwoJoin tj;
    Graph g;
    try {
      g = glue_two_join(side(g1, {a1}, {b1}), side(g2, {a2}, {b2}), &tj);
    } catch (const InvalidInput&) {
      continue;
    }
    const auto blocks = two_join_blocks(g, tj);
    const bool whole = oracle::perfect(oracle::Mat(g));
    const bool parts = oracle::perfect(oracle::Mat(blocks.g1.graph)) && oracle::perfect(oracle::Mat(blocks.g2.graph));
    CHECK(whole == parts);
    (whole ? perfect : imperfect)++;
  }
  CHECK(perfect > 10);
  CHECK(imperfect > 10);
}
