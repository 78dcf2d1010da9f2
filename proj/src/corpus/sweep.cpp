#include "berge/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "berge/basic.hpp"
#include "berge/berge_lab.hpp"
#include "berge/decompose.hpp"
#include "berge/errors.hpp"
#include "berge/families.hpp"
#include "berge/generate.hpp"
#include "berge/graph6.hpp"
#include "berge/isomorphism.hpp"
#include "berge/oracle.hpp"
#include "berge/ops.hpp"
#include "berge/structures.hpp"

namespace berge {

namespace {

constexpr std::string_view kTheorems[] = {"pgt",       "spgt",          "two_join_color", "replication",
                                          "hoang",     "konig",         "decomposition",  "wonderful",
                                          "square_free", "odd_hole_free", "wheel_free"};

void fail(SampleResult& r, std::string detail) {
  r.ok = false;
  if (r.detail.empty()) r.detail = std::move(detail);
}

double density(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Graph sample_until(int n, double lo, double hi, Rng& rng, const std::function<bool(const Graph&)>& accept) {
  for (int t = 0; t < 200000; ++t) {
    Graph g = random_graph(n, density(rng, lo, hi), rng);
    if (accept(g)) return g;
  }
  throw InvalidInput("sweep: rejection sampling gave up");
}

// Per-theorem checks. The graph is either given (exhaustive runs) or drawn here.

void check_pgt(const Graph& g, const Limits& limits, SampleResult& r) {
  const bool p = is_perfect(g, limits).perfect;
  if (p != is_perfect(complement(g), limits).perfect) fail(r, "perfect(g) differs from perfect(complement)");
  if (p != lovasz_bound_holds(g, limits)) fail(r, "perfect(g) differs from the Lovasz bound");
}

void check_spgt(const Graph& g, const Limits& limits, SampleResult& r) {
  const bool p = is_perfect(g, limits).perfect;
  if (p != is_berge(g, limits).berge) fail(r, p ? "perfect but not Berge" : "Berge but imperfect");
}

void check_replication(const Graph& g, const Limits& limits, SampleResult& r) {
  if (!is_perfect(g, limits).perfect) {
    r.applicable = false;
    return;
  }
  Limits wide = limits;
  wide.perfect = std::max(limits.perfect, g.order() + 2);
  for (int v = 0; v < g.order(); ++v) {
    for (int k = 2; k <= 3; ++k) {
      ++r.instances;
      if (!is_perfect(replicate(g, v, k), wide).perfect) fail(r, "replicate(" + std::to_string(v) + ", " + std::to_string(k) + ") is imperfect");
    }
  }
  for (auto [a, b] : g.edges()) {
    if (g.neighbors(a).intersects(g.neighbors(b))) continue;
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      ++r.instances;
      if (!is_perfect(replicate_minus_edge(g, u, v), wide).perfect) {
        fail(r, "replicate_minus_edge(" + std::to_string(u) + ", " + std::to_string(v) + ") is imperfect");
      }
    }
  }
}

void check_two_join_color(int max_block, Rng& rng, const Limits& limits, SampleResult& r) {
  const PerfectTwoJoin pj = random_perfect_two_join(max_block, rng);
  const Graph& g = pj.graph;
  r.graph6 = to_graph6(g);
  Limits wide = limits;
  wide.clique = std::max(limits.clique, g.order());
  const int chi = chromatic_number(g, wide).chi;

  PerfectColorOptions opts;
  opts.verify_perfect = false;
  opts.limits = limits;
  const PerfectColoring pc = perfect_color(g, opts);
  if (!pc.coloring.is_proper(g)) fail(r, "perfect_color returned an improper coloring");
  if (pc.coloring.num_colors != chi) fail(r, "perfect_color used " + std::to_string(pc.coloring.num_colors) + " colors, chi is " + std::to_string(chi));
  for (const auto& b : pc.tree.all_blocks()) {
    ++r.instances;
    if (b.expected_common >= 0 && b.common != b.expected_common) fail(r, "block coloring in the tree missed its intersection count");
  }

  // The generated 2-join itself, whatever perfect_color chose.
  const int omega = clique_number(g, wide);
  const BlockPair blocks = two_join_blocks(g, pj.two_join);
  const BlockColoring c1 = block_coloring(blocks.g1, omega, oracle_colorer(limits), limits);
  const BlockColoring c2 = block_coloring(blocks.g2, omega, oracle_colorer(limits), limits);
  for (const auto* c : {&c1, &c2}) {
    ++r.instances;
    if (c->expected_common() >= 0 && c->common != c->expected_common()) fail(r, "block coloring missed its intersection count");
  }
  const CombinedColoring cc = combine_colorings(g, pj.two_join, blocks, c1, c2, omega);
  if (!cc.coloring.is_proper(g) || cc.coloring.num_colors > omega) fail(r, "combined coloring is not an omega-coloring");
}

void check_hoang(const Graph& g, bool hole, const Limits& limits, SampleResult& r) {
  r.instances = 6;
  if (find_skew_partition(g, limits)) fail(r, "skew partition found");
  if (find_t_cutset(g, limits)) fail(r, "T-cutset found");
  if (find_u_cutset(g, limits)) fail(r, "U-cutset found");
  if (find_homogeneous_pair(g, limits)) fail(r, "homogeneous pair found");
  if (find_six_join(g, limits)) fail(r, "6-join found");
  const bool has_two_join = find_two_join(g).has_value();
  const bool expected = hole && g.order() >= 6;
  if (has_two_join != expected) fail(r, has_two_join ? "unexpected 2-join" : "missing 2-join");
}

void check_konig(int n, Rng& rng, SampleResult& r) {
  const int left = std::uniform_int_distribution<int>(1, std::max(1, n / 2))(rng);
  const int right = std::uniform_int_distribution<int>(1, std::max(1, n - left))(rng);
  const Graph b = random_bipartite(left, right, density(rng, 0.1, 0.9), rng);
  r.graph6 = to_graph6(b);
  const int delta = b.max_degree();
  const EdgeColoring ec = konig_edge_coloring(b);
  if (!ec.is_proper() || ec.num_colors != delta) fail(r, "edge coloring is not a proper Delta-coloring");
  // A triangle-free root makes every clique of the line graph a star.
  const Graph l = line_graph(b);
  const BasicClass cls = recognize_basic(l);
  if (cls.tag == BasicTag::not_basic) {
    fail(r, "line graph of a bipartite graph not recognized");
    return;
  }
  const Coloring c = color_basic(l, cls);
  if (!c.is_proper(l) || c.num_colors != delta) fail(r, "color_basic did not use omega colors on the line graph");
  r.instances = 2;
}

void check_decomposition(const Graph& g, const Limits& limits, SampleResult& r) {
  const auto rep = decomposition_report(g, limits);
  r.detail = std::string(to_string(rep.kind));
  if (rep.kind == DecompositionCase::none_found) fail(r, "none_found");
  r.instances = 1;
}

void check_wonderful(const Graph& g, const Limits& limits, SampleResult& r) {
  for_each_wonderful_instance(g, [&](const WonderfulInstance& inst) {
    ++r.instances;
    wonderful_check(inst, limits);
    return false;
  });
}

void run_sample(const SweepOptions& o, int index, SampleResult& r) {
  r.index = index;
  r.seed = sample_seed(o.seed, index);
  Rng rng(r.seed);
  const Limits& lim = o.limits;
  const std::string& t = o.theorem;
  std::optional<Graph> g;
  try {
    if (o.exhaustive && (t == "pgt" || t == "spgt")) {
      g = from_adjacency_code(o.n, static_cast<std::uint64_t>(index));
    } else if (t == "pgt" || t == "spgt") {
      g = random_graph(o.n, 0.5, rng);
    } else if (t == "replication") {
      if (o.exhaustive) {
        static thread_local std::vector<Graph> classes;
        static thread_local int classes_n = -1;
        if (classes_n != o.n) {
          classes = unlabeled_graphs(o.n);
          classes_n = o.n;
        }
        g = classes[index];
      } else {
        g = sample_until(o.n, 0.1, 0.9, rng, [&](const Graph& h) { return is_perfect(h, lim).perfect; });
      }
    } else if (t == "hoang") {
      const int m = 5 + 2 * (index / 2);
      g = index % 2 == 0 ? families::cycle(m) : families::antihole(m);
    } else if (t == "decomposition" || t == "wonderful" || t == "wheel_free") {
      g = random_berge(o.n, density(rng, 0.1, 0.9), rng);
    } else if (t == "square_free") {
      g = sample_until(o.n, 0.1, 0.6, rng, [&](const Graph& h) { return !has_square(h) && is_berge(h, lim).berge; });
    } else if (t == "odd_hole_free") {
      g = sample_until(o.n, 0.1, 0.9, rng, [&](const Graph& h) { return !find_hole(h, Parity::odd, 5); });
    }
    if (g) r.graph6 = to_graph6(*g);

    if (t == "pgt") check_pgt(*g, lim, r);
    else if (t == "spgt") check_spgt(*g, lim, r);
    else if (t == "replication") check_replication(*g, lim, r);
    else if (t == "two_join_color") check_two_join_color(o.n, rng, lim, r);
    else if (t == "hoang") check_hoang(*g, index % 2 == 0, lim, r);
    else if (t == "konig") check_konig(o.n, rng, r);
    else if (t == "decomposition") check_decomposition(*g, lim, r);
    else if (t == "wonderful") check_wonderful(*g, lim, r);
    else if (t == "square_free") r.detail = std::string(to_string(square_free_report(*g, lim)));
    else if (t == "odd_hole_free") r.detail = std::string(to_string(odd_hole_free_report(*g)));
    else if (t == "wheel_free") {
      const auto c = wheel_free_check(*g, lim);
      r.applicable = c.applies;
      if (!c.holds) fail(r, "neither basic nor a skew partition");
    }
  } catch (const InternalInconsistency& e) {
    r.internal = true;
    r.ok = false;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = e.what();
  }
}

int sample_count(const SweepOptions& o) {
  const std::string& t = o.theorem;
  if (t == "hoang") return o.n < 5 ? 0 : 2 * ((o.n - 5) / 2 + 1);
  if (o.exhaustive && (t == "pgt" || t == "spgt")) {
    if (o.n > 7) throw InvalidInput("sweep: exhaustive labeled runs stop at n = 7");
    return 1 << (o.n * (o.n - 1) / 2);
  }
  if (o.exhaustive && t == "replication") {
    if (o.n > 8) throw InvalidInput("sweep: exhaustive unlabeled runs stop at n = 8");
    return static_cast<int>(unlabeled_graphs(o.n).size());
  }
  return o.samples;
}

}  // namespace

std::vector<std::string_view> sweep_theorems() { return {std::begin(kTheorems), std::end(kTheorems)}; }

std::uint64_t sample_seed(std::uint64_t master, int index) {
  // splitmix64 of the pair
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SweepReport run_sweep(const SweepOptions& options, const std::function<void(const SampleResult&)>& on_result) {
  if (std::find(std::begin(kTheorems), std::end(kTheorems), options.theorem) == std::end(kTheorems)) {
    throw InvalidInput("sweep: unknown theorem '" + options.theorem + "'");
  }
  if (options.n < 1 || options.samples < 0) throw InvalidInput("sweep: need n >= 1 and samples >= 0");
  const auto start = std::chrono::steady_clock::now();
  const int count = sample_count(options);
  std::vector<SampleResult> results(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) run_sample(options, i, results[i]);
  };
  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, count));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepReport rep;
  rep.theorem = options.theorem;
  rep.n = options.n;
  rep.samples = count;
  rep.seed = options.seed;
  for (const auto& r : results) {
    rep.instances += r.instances;
    if (on_result) on_result(r);
    if (r.ok && !r.applicable) continue;
    ++rep.applicable;
    if (r.ok) {
      ++rep.passed;
    } else {
      ++rep.failed;
      rep.failures.push_back(r);
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace berge
