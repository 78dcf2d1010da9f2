// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "berge/basic.hpp"
#include "berge/berge_lab.hpp"
#include "berge/errors.hpp"
#include "berge/families.hpp"
#include "berge/gasparyan.hpp"
#include "berge/generate.hpp"
#include "berge/isomorphism.hpp"
#include "berge/oracle.hpp"
#include "berge/ops.hpp"
#include "berge/sweep.hpp"

using namespace berge;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 means no time bound
  std::function<Outcome()> run;
};

std::vector<Graph> minimally_imperfect_family() {
  std::vector<Graph> out;
  for (int n : {5, 7, 9, 11}) out.push_back(families::cycle(n));
  for (int n : {7, 9, 11}) out.push_back(families::antihole(n));
  return out;
}

Outcome odd_hole_facts() {
  Outcome o;
  int checked = 0;
  for (int n : {5, 7, 9, 11}) {
    const Graph c = families::cycle(n);
    const bool good = clique_number(c) == 2 && chromatic_number(c).chi == 3 && !is_perfect(c).perfect &&
                      is_minimally_imperfect(c);
    if (!good) {
      o.ok = false;
      o.detail += " C" + std::to_string(n) + " wrong;";
    }
    ++checked;
  }
  for (int n : {7, 9, 11}) {
    if (!is_minimally_imperfect(families::antihole(n))) {
      o.ok = false;
      o.detail += " antihole " + std::to_string(n) + " wrong;";
    }
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " graphs match";
  return o;
}

Outcome certificates() {
  Outcome o;
  int built = 0;
  for (const Graph& g : minimally_imperfect_family()) {
    const auto cert = gasparyan_certificate(g);
    const int rows = cert.alpha * cert.omega + 1;
    const Eigen::MatrixXi product = cert.stable_matrix() * cert.clique_matrix().transpose();
    Eigen::MatrixXi expected = Eigen::MatrixXi::Ones(rows, rows);
    expected -= Eigen::MatrixXi::Identity(rows, rows);
    const bool good = cert.rows() == rows && static_cast<int>(cert.cliques.size()) == rows && g.order() == rows &&
                      product.rows() == rows && product.cols() == rows && product == expected &&
                      verify_certificate(g, cert).empty();
    if (!good) {
      o.ok = false;
      o.detail += " n=" + std::to_string(g.order()) + " bad certificate;";
    }
    ++built;
  }
  if (o.ok) o.detail = std::to_string(built) + " certificates, A*B^T = J - I entrywise";
  return o;
}

// Criteria 3 and 4 share one population.
struct PopulationCounts {
  long long graphs = 0;
  long long pgt_mismatch = 0;
  long long spgt_mismatch = 0;
  long long exceptions = 0;
  long long perfect = 0;
  bool done = false;
};
PopulationCounts population;

void check_graph(const Graph& g) {
  ++population.graphs;
  try {
    const bool p = is_perfect(g).perfect;
    const bool pc = is_perfect(complement(g)).perfect;
    const bool lov = lovasz_bound_holds(g);
    const bool berge = is_berge(g).berge;
    if (p != pc || p != lov) ++population.pgt_mismatch;
    if (p != berge) ++population.spgt_mismatch;
    if (p) ++population.perfect;
  } catch (const std::exception&) {
    ++population.exceptions;
  }
}

void run_population() {
  if (population.done) return;
  for (std::uint64_t code = 0; code < (1u << 15); ++code) check_graph(from_adjacency_code(6, code));
  for (int n : {7, 8}) {
    for (int i = 0; i < 10000; ++i) {
      Rng rng(sample_seed(static_cast<std::uint64_t>(n), i));
      check_graph(random_graph(n, 0.5, rng));
    }
  }
  population.done = true;
}

Outcome perfect_graph_theorem() {
  run_population();
  Outcome o;
  o.ok = population.pgt_mismatch == 0 && population.exceptions == 0;
  o.detail = std::to_string(population.graphs) + " graphs (2^15 on 6 vertices, 10^4 each at 7 and 8), " +
             std::to_string(population.perfect) + " perfect, " + std::to_string(population.pgt_mismatch) +
             " mismatches, " + std::to_string(population.exceptions) + " exceptions";
  return o;
}

Outcome strong_perfect_graph_theorem() {
  run_population();
  Outcome o;
  o.ok = population.spgt_mismatch == 0 && population.exceptions == 0;
  o.detail = std::to_string(population.graphs) + " graphs, " + std::to_string(population.spgt_mismatch) +
             " perfect/Berge mismatches, " + std::to_string(population.exceptions) + " exceptions";
  return o;
}

std::string describe(const SweepReport& r) {
  std::ostringstream os;
  os << r.theorem << " n=" << r.n << ": " << r.applicable << " applicable, " << r.passed << " passed, " << r.failed
     << " failed, " << r.instances << " instances";
  if (!r.failures.empty()) os << "; first failure " << r.failures.front().graph6 << " " << r.failures.front().detail;
  return os.str();
}

SweepReport sweep(const std::string& theorem, int n, int samples, bool exhaustive = false) {
  SweepOptions opt;
  opt.theorem = theorem;
  opt.n = n;
  opt.samples = samples;
  opt.seed = 20240601;
  opt.exhaustive = exhaustive;
  return run_sweep(opt);
}

Outcome sweep_outcome(const SweepReport& r, int min_applicable, long long min_instances = 0) {
  Outcome o;
  o.ok = r.ok() && r.applicable >= min_applicable && r.instances >= min_instances;
  o.detail = describe(r);
  return o;
}

Outcome two_join_compositions() { return sweep_outcome(sweep("two_join_color", 10, 1000), 1000); }

Outcome replication() {
  Outcome o;
  int graphs = 0;
  long long instances = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto r = sweep("replication", n, 0, true);
    graphs += r.applicable;
    instances += r.instances;
    if (!r.ok()) {
      o.ok = false;
      o.detail += describe(r) + "; ";
    }
  }
  o.detail += std::to_string(graphs) + " perfect unlabeled graphs on <= 7 vertices, " + std::to_string(instances) +
              " replications checked";
  return o;
}

Outcome hoang() { return sweep_outcome(sweep("hoang", 11, 0), 8); }

// Pivoting Bron-Kerbosch on VertexSets: line graphs here exceed the mask-based
// clique search.
void max_clique_size(const Graph& g, VertexSet r, VertexSet p, VertexSet x, int size, int& best) {
  if (p.empty() && x.empty()) {
    best = std::max(best, size);
    return;
  }
  if (size + p.size() <= best) return;
  const int pivot = (p | x).first();
  for (int v : p - g.neighbors(pivot)) {
    r.insert(v);
    max_clique_size(g, r, p & g.neighbors(v), x & g.neighbors(v), size + 1, best);
    r.erase(v);
    p.erase(v);
    x.insert(v);
  }
}

int large_clique_number(const Graph& g) {
  int best = 0;
  max_clique_size(g, g.empty_set(), g.vertices(), g.empty_set(), 0, best);
  return best;
}

Outcome konig() {
  Outcome o;
  int graphs = 0;
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(sample_seed(30, i));
    const int left = 1 + static_cast<int>(rng() % 15);
    const int right = 1 + static_cast<int>(rng() % 15);
    const double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
    const Graph g = random_bipartite(left, right, p, rng);
    ++graphs;
    try {
      const auto ec = konig_edge_coloring(g);
      bool good = ec.is_proper() && ec.num_colors == g.max_degree() &&
                  static_cast<int>(ec.edges.size()) == g.num_edges();
      const Graph l = line_graph(g);
      const auto c = color_basic(l, recognize_basic(l));
      good = good && c.is_proper(l) && c.num_colors == large_clique_number(l);
      if (!good) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  o.ok = bad == 0;
  o.detail = std::to_string(graphs) + " bipartite graphs on <= 30 vertices, " + std::to_string(bad) + " failures";
  return o;
}

Outcome decomposition() { return sweep_outcome(sweep("decomposition", 9, 10000), 10000); }

Outcome wonderful() { return sweep_outcome(sweep("wonderful", 9, 300), 300, 100); }

Outcome square_and_odd_hole_free() {
  const auto sq = sweep("square_free", 9, 1000);
  const auto ohf = sweep("odd_hole_free", 9, 1000);
  Outcome o;
  o.ok = sq.ok() && ohf.ok() && sq.applicable >= 1000 && ohf.applicable >= 1000;
  o.detail = describe(sq) + "; " + describe(ohf);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "odd hole and antihole facts", 5, odd_hole_facts},
      {2, "minimally imperfect certificates", 5, certificates},
      {3, "perfect graph theorem", 600, perfect_graph_theorem},
      {4, "perfect iff Berge", 600, strong_perfect_graph_theorem},
      {5, "2-join compositions color through blocks", 300, two_join_compositions},
      {6, "replication keeps perfection", 0, replication},
      {7, "odd holes and antiholes have no forbidden structure", 600, hoang},
      {8, "bipartite edge coloring", 60, konig},
      {9, "Berge graphs decompose", 0, decomposition},
      {10, "Wonderful Lemma outcomes", 0, wonderful},
      {11, "square-free and odd-hole-free disjunctions", 0, square_and_odd_hole_free},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    if (!o.ok) ++failed;
    std::printf("%s criterion %d: %s: %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(),
                seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
