#include <doctest.h>

#include <random>

#include "berge/errors.hpp"
#include "berge/families.hpp"
#include "berge/hoang.hpp"
#include "berge/ops.hpp"
#include "berge/structures.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

Graph graph_of(int n, std::initializer_list<Edge> edges) { return Graph(n, edges); }

/// T- and U-cutsets by brute force over every 4-assignment.
struct SkewKinds {
  bool t = false;
  bool u = false;
};

SkewKinds brute_skew_kinds(const Graph& g) {
  const int n = g.order();
  SkewKinds out;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 4;
  std::vector<int> part(n);
  for (long code = 0; code < total; ++code) {
    long c = code;
    int count[4] = {0, 0, 0, 0};
    for (int i = 0; i < n; ++i) {
      part[i] = static_cast<int>(c % 4);
      c /= 4;
      ++count[part[i]];
    }
    if (!count[0] || !count[1] || !count[2] || !count[3]) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        if (part[x] == 0 && part[y] == 1 && !g.adjacent(x, y)) ok = false;
        if (part[x] == 2 && part[y] == 3 && g.adjacent(x, y)) ok = false;
      }
    }
    if (!ok) continue;
    auto complete_to = [&](int v, int p) {
      for (int x = 0; x < n; ++x) {
        if (part[x] == p && !g.adjacent(v, x)) return false;
      }
      return true;
    };
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (part[u] == 2 && part[v] == 3 && complete_to(u, 0) && complete_to(v, 0)) out.t = true;
        if (u != v && part[u] == 2 && part[v] == 2 && complete_to(u, 0) && complete_to(v, 1)) out.u = true;
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("2-join examples") {
  CHECK_FALSE(find_two_join(families::cycle(5)));
  const auto c7 = find_two_join(families::cycle(7));
  REQUIRE(c7);
  CHECK(is_two_join(families::cycle(7), *c7));
  CHECK(c7->V1.contains(0));
  CHECK_FALSE(find_two_join(families::antihole(7)));
}

TEST_CASE("2-join search matches exhaustive side assignment") {
  std::mt19937_64 rng(31);
  int found = 0;
  for (int t = 0; t < 600; ++t) {
    const int n = 6 + t % 4;
    const Graph g = oracle::random_graph(n, 0.2 + 0.1 * (t % 5), rng);
    const auto tj = find_two_join(g);
    CHECK(tj.has_value() == oracle::has_two_join(oracle::Mat(g)));
    if (tj) {
      ++found;
      CHECK(is_two_join(g, *tj));
    }
  }
  CHECK(found > 20);
}

TEST_CASE("2-join validator rejects broken witnesses") {
  const Graph c8 = families::cycle(8);
  auto tj = *find_two_join(c8);
  CHECK(is_two_join(c8, tj));
  auto bad = tj;
  std::swap(bad.A1, bad.B1);
  CHECK_FALSE(is_two_join(c8, bad));
  bad = tj;
  bad.A2 = bad.A2 | bad.B2;
  CHECK_FALSE(is_two_join(c8, bad));
}

TEST_CASE("6-join examples") {
  CHECK_FALSE(find_six_join(families::cycle(6)));
  CHECK_FALSE(find_six_join(families::cycle(5)));
  const Graph g = graph_of(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {7, 1}});
  const auto sj = find_six_join(g);
  REQUIRE(sj);
  CHECK(is_six_join(g, *sj));
  for (int i = 0; i < 4; ++i) {
    CHECK_FALSE(sj->X[i].empty());
    CHECK_FALSE(sj->Y[i].empty());
  }
  auto bad = *sj;
  std::swap(bad.X[3], bad.Y[3]);
  CHECK_FALSE(is_six_join(g, bad));
}

TEST_CASE("6-joins survive replication inside a part") {
  const Graph base = graph_of(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {7, 1}});
  for (int v = 0; v < 8; ++v) {
    const Graph g = replicate(base, v, 2);
    const auto sj = find_six_join(g);
    REQUIRE(sj);
    CHECK(is_six_join(g, *sj));
  }
}

TEST_CASE("skew partition examples") {
  const auto p4 = find_skew_partition(families::path(4));
  REQUIRE(p4);
  CHECK(p4->A.elements() == std::vector<int>{1});
  CHECK(p4->B.elements() == std::vector<int>{2});
  CHECK(p4->C.elements() == std::vector<int>{0});
  CHECK(p4->D.elements() == std::vector<int>{3});
  CHECK_FALSE(find_skew_partition(families::cycle(5)));
  CHECK_FALSE(find_skew_partition(families::antihole(7)));
  Limits tight;
  tight.skew_partition = 6;
  CHECK_THROWS_AS(find_skew_partition(families::cycle(7), tight), ResourceLimit);
}

TEST_CASE("cutset classification") {
  const Graph p4 = families::path(4);
  const auto sp = *find_skew_partition(p4);
  const auto kinds = classify_cutset(p4, sp);
  auto has = [&](CutsetTag t) {
    return std::any_of(kinds.begin(), kinds.end(), [&](const CutsetKind& k) { return k.tag == t; });
  };
  CHECK(has(CutsetTag::star));
  CHECK(has(CutsetTag::double_star));
  CHECK_FALSE(has(CutsetTag::t_cutset));
  CHECK_FALSE(has(CutsetTag::plain_skew));
  CHECK_THROWS_AS(classify_cutset(p4, SkewPartition{sp.B, sp.A, sp.D, sp.D}), InvalidInput);

  // A = {x} and B = N(x) n S for a star cutset S = {1, 2} centered at 1.
  const Graph g = graph_of(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  const SkewPartition star{VertexSet(5, {1}), VertexSet(5, {2}), VertexSet(5, {0}), VertexSet(5, {3, 4})};
  REQUIRE(is_skew_partition(g, star));
  const auto sk = classify_cutset(g, star);
  CHECK(std::any_of(sk.begin(), sk.end(), [](const CutsetKind& k) { return k.tag == CutsetTag::star; }));
}

TEST_CASE("skew partitions and refinements match brute force") {
  std::mt19937_64 rng(32);
  int skew = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 4 + t % 4;
    const Graph g = oracle::random_graph(n, 0.25 + 0.1 * (t % 6), rng);
    const auto sp = find_skew_partition(g);
    CHECK(sp.has_value() == oracle::has_skew_partition(oracle::Mat(g)));
    const SkewKinds kinds = brute_skew_kinds(g);
    const auto t_cut = find_t_cutset(g);
    const auto u_cut = find_u_cutset(g);
    CHECK(t_cut.has_value() == kinds.t);
    CHECK(u_cut.has_value() == kinds.u);
    if (t_cut) CHECK(is_t_cutset(g, t_cut->first, t_cut->second.u, t_cut->second.v));
    if (u_cut) CHECK(is_u_cutset(g, u_cut->first, u_cut->second.u, u_cut->second.v));
    if (!sp) continue;
    ++skew;
    CHECK(is_skew_partition(g, *sp));
    // Every skew partition yields a double star cutset.
    CHECK(find_double_star_cutset(g).has_value());
    const auto ks = classify_cutset(g, *sp);
    const bool star = std::any_of(ks.begin(), ks.end(), [](const CutsetKind& k) { return k.tag == CutsetTag::star; });
    const bool dstar =
        std::any_of(ks.begin(), ks.end(), [](const CutsetKind& k) { return k.tag == CutsetTag::double_star; });
    if (star) CHECK(dstar);
  }
  CHECK(skew > 30);
}

TEST_CASE("every skew partition is visited once") {
  const Graph p4 = families::path(4);
  int count = 0;
  for_each_skew_partition(p4, [&](const SkewPartition& sp) {
    CHECK(is_skew_partition(p4, sp));
    ++count;
    return false;
  });
  CHECK(count == 1);
}

TEST_CASE("star cutsets") {
  const Graph bowtie = graph_of(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const auto s = find_star_cutset(bowtie);
  REQUIRE(s);
  CHECK(s->cutset.elements() == std::vector<int>{2});
  CHECK(s->center == 2);
  CHECK_FALSE(find_star_cutset(families::cycle(5)));
  CHECK_FALSE(find_star_cutset(families::complete(4)));
}

TEST_CASE("double star cutsets") {
  const auto p4 = find_double_star_cutset(families::path(4));
  REQUIRE(p4);
  CHECK(p4->cutset.elements() == std::vector<int>{1, 2});
  CHECK_FALSE(find_double_star_cutset(families::cycle(6)));
  // Two 4-holes 0-1-2-3 and 0-1-4-5 sharing the edge 0-1.
  const Graph g = graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 5}, {5, 0}});
  const auto d = find_double_star_cutset(g);
  REQUIRE(d);
  CHECK(d->cutset.elements() == std::vector<int>{0, 1});
  CHECK(is_double_star_cutset(g, d->cutset, d->u, d->v));
}

TEST_CASE("star and double star searches match brute force") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + t % 7;
    const Graph g = oracle::random_graph(n, 0.2 + 0.1 * (t % 6), rng);
    const oracle::Mat m(g);
    const auto s = find_star_cutset(g);
    const auto d = find_double_star_cutset(g);
    CHECK(s.has_value() == oracle::has_star_cutset(m));
    CHECK(d.has_value() == oracle::has_double_star_cutset(m));
    if (s) CHECK(is_star_cutset(g, s->cutset, s->center));
    if (d) CHECK(is_double_star_cutset(g, d->cutset, d->u, d->v));
  }
}

TEST_CASE("homogeneous pair examples") {
  // C4 a-b-c-d with a replicated into a' = 4.
  const Graph g = replicate(families::cycle(4), 0, 2);
  const HomogeneousPair example_pair{VertexSet(5, {0, 4}), VertexSet(5, {1}), VertexSet(5, {2, 3})};
  CHECK(is_homogeneous_pair(g, example_pair));
  const auto h = find_homogeneous_pair(g);
  REQUIRE(h);
  CHECK(is_homogeneous_pair(g, *h));
  CHECK_FALSE(find_homogeneous_pair(families::cycle(5)));
  // Regression value from the exhaustive 3-partition oracle.
  CHECK(oracle::has_homogeneous_pair(oracle::Mat(families::cycle(6))));
  const auto c6 = find_homogeneous_pair(families::cycle(6));
  REQUIRE(c6);
  CHECK(is_homogeneous_pair(families::cycle(6), *c6));
}

TEST_CASE("homogeneous pair search matches brute force under both readings") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 200; ++t) {
    const int n = 5 + t % 3;
    const Graph g = oracle::random_graph(n, 0.3 + 0.1 * (t % 4), rng);
    const oracle::Mat m(g);
    const bool strict = oracle::has_homogeneous_pair(m, false);
    CHECK(strict == oracle::has_homogeneous_pair(m, true));
    const auto h = find_homogeneous_pair(g);
    CHECK(h.has_value() == strict);
    if (h) {
      CHECK(is_homogeneous_pair(g, *h));
      CHECK_FALSE(h->A1.empty());
      CHECK_FALSE(h->A2.empty());
    }
    const auto loose = find_homogeneous_pair(g, Limits{}, true);
    CHECK(loose.has_value() == strict);
    if (loose) CHECK(is_homogeneous_pair(g, *loose));
  }
}

TEST_CASE("odd holes and antiholes carry no forbidden structure") {
  for (int n = 5; n <= 9; n += 2) {
    for (const Graph& g : {families::cycle(n), families::antihole(n)}) {
      CHECK_FALSE(find_skew_partition(g));
      CHECK_FALSE(find_t_cutset(g));
      CHECK_FALSE(find_u_cutset(g));
      CHECK_FALSE(find_homogeneous_pair(g));
      CHECK_FALSE(find_six_join(g));
    }
    CHECK(find_two_join(families::cycle(n)).has_value() == (n >= 7));
    CHECK_FALSE(find_two_join(families::antihole(n)));
  }
}

TEST_CASE("lemma evaluators on a hand-built perfect configuration") {
  // P4 with its unique skew partition A={1}, B={2}, C={0}, D={3}.
  const Graph p4 = families::path(4);
  const auto sp = *find_skew_partition(p4);
  CHECK(every_vertex_has_neighbor_in(p4, sp.A, sp.C));
  CHECK_FALSE(every_vertex_has_neighbor_in(p4, sp.A, sp.D));
  CHECK(vertex_without_neighbor_in(p4, sp.A, sp.D) == 1);
  CHECK(contains_omega_clique(p4, VertexSet(4, {1, 2})));
  CHECK_FALSE(contains_omega_clique(p4, VertexSet(4, {0, 3})));
  CHECK(every_max_stable_set_meets(p4, VertexSet(4, {0, 1})));
  const LemmaCheck lc = neighbor_lemma(p4, sp);
  CHECK(lc.holds());
}
