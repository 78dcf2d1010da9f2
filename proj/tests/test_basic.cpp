#include <doctest.h>

#include <random>
#include <set>

#include "berge/basic.hpp"
#include "berge/errors.hpp"
#include "berge/families.hpp"
#include "berge/isomorphism.hpp"
#include "berge/ops.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

Graph random_bip(int l, int r, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(l + r);
  for (int u = 0; u < l; ++u) {
    for (int v = 0; v < r; ++v) {
      if (coin(rng)) g.add_edge(u, l + v);
    }
  }
  return g;
}

/// Canonical codes of the line graphs of all connected graphs with m edges
/// (roots on at most m + 1 vertices), split by bipartite roots.
struct LineCatalog {
  std::set<std::uint64_t> any, bipartite_root;
};

LineCatalog line_catalog(int m) {
  LineCatalog cat;
  for (int k = 2; k <= m + 1; ++k) {
    for (const Graph& r : unlabeled_graphs(k)) {
      if (r.num_edges() != m || !is_connected(r)) continue;
      const auto code = oracle::canon(oracle::Mat(line_graph(r)));
      cat.any.insert(code);
      if (oracle::bipartite(oracle::Mat(r))) cat.bipartite_root.insert(code);
    }
  }
  return cat;
}

}  // namespace

TEST_CASE("recognition examples") {
  CHECK(recognize_basic(families::cycle(6)).tag == BasicTag::bipartite);
  const Graph k33 = families::complete_bipartite(3, 3);
  const BasicClass l = recognize_basic(line_graph(k33));
  CHECK(l.tag == BasicTag::line_of_bipartite);
  REQUIRE(l.root);
  CHECK(are_isomorphic(l.root->root, k33));
  CHECK(witness_is_valid(line_graph(k33), l));
  CHECK(recognize_basic(families::cycle(5)).tag == BasicTag::not_basic);
  CHECK_FALSE(basic_membership(families::cycle(5)).any());
  CHECK(recognize_basic(complement(families::cycle(6))).tag == BasicTag::complement_of_bipartite);
  CHECK(recognize_basic(complement(line_graph(k33))).tag == BasicTag::line_of_bipartite);
}

TEST_CASE("line graph roots") {
  const auto k3 = line_graph_root(families::complete(3));
  REQUIRE(k3);
  CHECK(line_graph(k3->root).order() == 3);
  CHECK(is_line_root_of(families::complete(3), *k3));
  const auto c5 = line_graph_root(families::cycle(5));
  REQUIRE(c5);
  CHECK(are_isomorphic(c5->root, families::cycle(5)));
  CHECK_FALSE(line_graph_root(families::complete_bipartite(1, 3)));
}

TEST_CASE("line graph recognition matches a root catalog") {
  for (int m = 1; m <= 6; ++m) {
    const LineCatalog cat = line_catalog(m);
    for (const Graph& g : unlabeled_graphs(m)) {
      if (!is_connected(g)) continue;
      const auto code = oracle::canon(oracle::Mat(g));
      const auto root = line_graph_root(g);
      CHECK(root.has_value() == (cat.any.count(code) > 0));
      if (root) CHECK(is_line_root_of(g, *root));
      CHECK(basic_membership(g).line_of_bipartite == (cat.bipartite_root.count(code) > 0));
    }
  }
}

TEST_CASE("roots rebuild the input on the nose") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const Graph r = oracle::random_graph(3 + t % 6, 0.5, rng);
    const Graph l = line_graph(r);
    const auto root = line_graph_root(l);
    REQUIRE(root);
    CHECK(is_line_root_of(l, *root));
    CHECK(root->edge_of.size() == static_cast<std::size_t>(l.order()));
  }
}

TEST_CASE("membership of the complement classes agrees with brute force") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const Graph g = oracle::random_graph(2 + t % 7, 0.5, rng);
    const oracle::Mat m(g);
    const auto mem = basic_membership(g);
    CHECK(mem.bipartite == oracle::bipartite(m));
    CHECK(mem.complement_of_bipartite == oracle::bipartite(m.complement()));
    CHECK(mem.complement_of_line_of_bipartite == basic_membership(complement(g)).line_of_bipartite);
  }
}

TEST_CASE("Konig edge coloring") {
  CHECK(konig_edge_coloring(families::complete_bipartite(3, 3)).num_colors == 3);
  CHECK(konig_edge_coloring(families::path(4)).num_colors == 2);
  CHECK(konig_edge_coloring(families::empty(3)).num_colors == 0);
  CHECK_THROWS_AS(konig_edge_coloring(families::cycle(5)), InvalidInput);
  std::mt19937_64 rng(14);
  for (int t = 0; t < 50; ++t) {
    const Graph b = random_bip(7, 7, 0.4, rng);
    const EdgeColoring ec = konig_edge_coloring(b);
    CHECK(ec.is_proper());
    CHECK(ec.num_colors == b.max_degree());
    for (auto [u, v] : b.edges()) CHECK(ec.color_of(u, v) >= 0);
  }
}

TEST_CASE("matching and vertex cover sizes agree") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 100; ++t) {
    const Graph b = random_bip(1 + t % 6, 1 + t % 5, 0.4, rng);
    const auto sides = is_bipartite(b);
    REQUIRE(sides);
    const auto mate = bipartite_matching(b, *sides);
    int matched = 0;
    for (int v = 0; v < b.order(); ++v) matched += mate[v] >= 0;
    const VertexSet cover = konig_vertex_cover(b, *sides, mate);
    CHECK(cover.size() * 2 == matched);
    for (auto [u, v] : b.edges()) CHECK((cover.contains(u) || cover.contains(v)));
    // The matching is maximum: no smaller cover exists.
    CHECK(cover.size() == b.order() - oracle::alpha(oracle::Mat(b)));
  }
}

TEST_CASE("basic colorings use omega colors") {
  CHECK(color_basic(families::cycle(6), recognize_basic(families::cycle(6))).num_colors == 2);
  const Graph l = line_graph(families::complete_bipartite(3, 3));
  CHECK(color_basic(l, recognize_basic(l)).num_colors == 3);
  const Graph c6c = complement(families::cycle(6));
  const Coloring cc = color_basic(c6c, recognize_basic(c6c));
  CHECK(cc.num_colors == 3);
  CHECK(cc.is_proper(c6c));
  CHECK_THROWS_AS(color_basic(families::cycle(5), recognize_basic(families::cycle(5))), InvalidInput);

  std::mt19937_64 rng(16);
  int tested = 0;
  for (int t = 0; t < 400; ++t) {
    Graph g;
    switch (t % 4) {
      case 0: g = random_bip(1 + t % 5, 1 + t % 4, 0.5, rng); break;
      case 1: g = complement(random_bip(1 + t % 5, 1 + t % 4, 0.5, rng)); break;
      case 2: g = line_graph(random_bip(2 + t % 3, 2 + t % 4, 0.5, rng)); break;
      default: g = complement(line_graph(random_bip(2 + t % 3, 2 + t % 3, 0.5, rng))); break;
    }
    if (g.order() == 0 || g.order() > 10) continue;
    const BasicClass c = recognize_basic(g);
    REQUIRE(c.tag != BasicTag::not_basic);
    const Coloring col = color_basic(g, c);
    const oracle::Mat m(g);
    CHECK(col.is_proper(g));
    CHECK(col.num_colors == oracle::chi(m));
    CHECK(col.num_colors == oracle::omega(m));
    ++tested;
  }
  CHECK(tested > 300);
}
