#include "berge/generate.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "berge/basic.hpp"
#include "berge/berge_lab.hpp"
#include "berge/decompose.hpp"
#include "berge/errors.hpp"
#include "berge/families.hpp"
#include "berge/oracle.hpp"
#include "berge/ops.hpp"

namespace berge {

Graph random_graph(int n, double p, Rng& rng) {
  if (n < 0 || p < 0 || p > 1) throw InvalidInput("random_graph: need n >= 0 and 0 <= p <= 1");
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_bipartite(int left, int right, double p, Rng& rng) {
  if (left < 0 || right < 0 || p < 0 || p > 1) throw InvalidInput("random_bipartite: bad parameters");
  std::bernoulli_distribution coin(p);
  Graph g(left + right);
  for (int u = 0; u < left; ++u) {
    for (int v = 0; v < right; ++v) {
      if (coin(rng)) g.add_edge(u, left + v);
    }
  }
  return g;
}

Graph random_berge(int n, double p, Rng& rng, int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    Graph g = random_graph(n, p, rng);
    if (is_berge(g).berge) return g;
  }
  throw InvalidInput("random_berge: no Berge graph after " + std::to_string(max_tries) + " tries");
}

Graph glue_two_join(const TwoJoinSide& s1, const TwoJoinSide& s2, TwoJoin* out) {
  const int n1 = s1.graph.order();
  const int n = n1 + s2.graph.order();
  Graph g = families::disjoint_union(s1.graph, s2.graph);
  TwoJoin tj{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n1; ++v) tj.V1.insert(v);
  for (int v = n1; v < n; ++v) tj.V2.insert(v);
  for (int v : s1.a) tj.A1.insert(v);
  for (int v : s1.b) tj.B1.insert(v);
  for (int v : s2.a) tj.A2.insert(n1 + v);
  for (int v : s2.b) tj.B2.insert(n1 + v);
  for (int x : tj.A1) {
    for (int y : tj.A2) g.add_edge(x, y);
  }
  for (int x : tj.B1) {
    for (int y : tj.B2) g.add_edge(x, y);
  }
  if (!is_two_join(g, tj)) throw InvalidInput("glue_two_join: sides do not form a 2-join");
  if (out) *out = tj;
  return g;
}

namespace {

TwoJoinSide random_side(int size, Rng& rng) {
  std::uniform_real_distribution<double> density(0.2, 0.8);
  TwoJoinSide s{random_graph(size, density(rng), rng), VertexSet(size), VertexSet(size)};
  std::vector<int> order(size);
  for (int i = 0; i < size; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  // The first vertex goes to A, the second to B, the rest anywhere.
  std::uniform_int_distribution<int> where(0, 2);
  s.a.insert(order[0]);
  s.b.insert(order[1]);
  for (int i = 2; i < size; ++i) {
    const int w = where(rng);
    if (w == 0) s.a.insert(order[i]);
    if (w == 1) s.b.insert(order[i]);
  }
  return s;
}

}  // namespace

PerfectTwoJoin random_perfect_two_join(int max_block, Rng& rng) {
  if (max_block < 5) throw InvalidInput("random_perfect_two_join: blocks need at least 5 vertices");
  std::uniform_int_distribution<int> side_size(3, max_block - 2);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const TwoJoinSide s1 = random_side(side_size(rng), rng);
    const TwoJoinSide s2 = random_side(side_size(rng), rng);
    PerfectTwoJoin out;
    out.graph = glue_two_join(s1, s2, &out.two_join);
    const BlockPair blocks = two_join_blocks(out.graph, out.two_join);
    if (blocks.g1.graph.order() > max_block || blocks.g2.graph.order() > max_block) continue;
    if (!blocks.parities_match()) continue;
    if (!is_perfect(blocks.g1.graph).perfect || !is_perfect(blocks.g2.graph).perfect) continue;
    return out;
  }
  throw InvalidInput("random_perfect_two_join: no composition found");
}

// --- recipes -----------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int int_arg(const GeneratorRecipe& r, std::size_t i) {
  const std::string& s = r.args[i];
  int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw InvalidInput(r.kind + ": argument " + std::to_string(i + 1) + " is not an integer");
  }
  return v;
}

double real_arg(const GeneratorRecipe& r, std::size_t i) {
  try {
    std::size_t used = 0;
    const double v = std::stod(r.args[i], &used);
    if (used == r.args[i].size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput(r.kind + ": argument " + std::to_string(i + 1) + " is not a number");
}

VertexSet set_arg(const GeneratorRecipe& r, std::size_t i, int n) {
  VertexSet s(n);
  std::string_view text = r.args[i];
  while (!text.empty()) {
    const std::size_t plus = std::min(text.find('+'), text.size());
    GeneratorRecipe single{r.kind, {trim(text.substr(0, plus))}};
    const int v = int_arg(single, 0);
    if (v < 0 || v >= n) throw InvalidInput(r.kind + ": vertex " + std::to_string(v) + " out of range");
    s.insert(v);
    text = plus < text.size() ? text.substr(plus + 1) : std::string_view{};
  }
  return s;
}

void expect_args(const GeneratorRecipe& r, std::size_t count) {
  if (r.args.size() != count) {
    throw InvalidInput(r.kind + ": expected " + std::to_string(count) + " arguments, got " + std::to_string(r.args.size()));
  }
}

int size_arg(const GeneratorRecipe& r, std::size_t i, int lo) {
  const int v = int_arg(r, i);
  if (v < lo) throw InvalidInput(r.kind + ": argument " + std::to_string(i + 1) + " must be at least " + std::to_string(lo));
  return v;
}

Graph build(const GeneratorRecipe& r, Rng& rng) {
  const std::string& k = r.kind;
  if (k == "cycle" || k == "antihole" || k == "path" || k == "complete" || k == "empty") {
    expect_args(r, 1);
    if (k == "cycle") return families::cycle(size_arg(r, 0, 3));
    if (k == "antihole") return families::antihole(size_arg(r, 0, 3));
    if (k == "path") return families::path(size_arg(r, 0, 0));
    if (k == "complete") return families::complete(size_arg(r, 0, 0));
    return families::empty(size_arg(r, 0, 0));
  }
  if (k == "complete_bipartite") {
    expect_args(r, 2);
    return families::complete_bipartite(size_arg(r, 0, 0), size_arg(r, 1, 0));
  }
  if (k == "random_bipartite" || k == "line_of_random_bipartite") {
    expect_args(r, 3);
    Graph b = random_bipartite(size_arg(r, 0, 0), size_arg(r, 1, 0), real_arg(r, 2), rng);
    return k == "random_bipartite" ? b : line_graph(b);
  }
  if (k == "random_berge_rejection") {
    expect_args(r, 2);
    return random_berge(size_arg(r, 0, 0), real_arg(r, 1), rng);
  }
  if (k == "complement_of") {
    expect_args(r, 1);
    return complement(build(GeneratorRecipe::parse(r.args[0]), rng));
  }
  if (k == "replicate_in") {
    expect_args(r, 3);
    Graph g = build(GeneratorRecipe::parse(r.args[0]), rng);
    const int v = int_arg(r, 1);
    if (v < 0 || v >= g.order()) throw InvalidInput("replicate_in: vertex out of range");
    return replicate(g, v, size_arg(r, 2, 1));
  }
  if (k == "glue_two_join") {
    if (r.args.size() == 1) return random_perfect_two_join(size_arg(r, 0, 5), rng).graph;
    if (r.args.size() != 2 && r.args.size() != 6) throw InvalidInput("glue_two_join: expected 1, 2 or 6 arguments");
    TwoJoinSide s1{build(GeneratorRecipe::parse(r.args[0]), rng), {}, {}};
    TwoJoinSide s2{build(GeneratorRecipe::parse(r.args[1]), rng), {}, {}};
    for (auto* s : {&s1, &s2}) {
      const int n = s->graph.order();
      if (n < 3) throw InvalidInput("glue_two_join: each side needs at least 3 vertices");
      s->a = VertexSet(n, {0});
      s->b = VertexSet(n, {n - 1});
    }
    if (r.args.size() == 6) {
      s1.a = set_arg(r, 2, s1.graph.order());
      s1.b = set_arg(r, 3, s1.graph.order());
      s2.a = set_arg(r, 4, s2.graph.order());
      s2.b = set_arg(r, 5, s2.graph.order());
    }
    return glue_two_join(s1, s2);
  }
  throw InvalidInput("unknown generator '" + k + "'");
}

}  // namespace

GeneratorRecipe GeneratorRecipe::parse(std::string_view text) {
  const std::string s = trim(text);
  const std::size_t open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw InvalidInput("recipe '" + s + "' is not of the form kind(args)");
  GeneratorRecipe r;
  r.kind = trim(std::string_view(s).substr(0, open));
  const std::string_view body = std::string_view(s).substr(open + 1, s.size() - open - 2);
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    const char c = i < body.size() ? body[i] : ',';
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw InvalidInput("recipe '" + s + "' has unbalanced parentheses");
    if (c == ',' && depth == 0) {
      r.args.push_back(trim(body.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw InvalidInput("recipe '" + s + "' has unbalanced parentheses");
  if (r.args.size() == 1 && r.args[0].empty()) r.args.clear();
  return r;
}

std::string GeneratorRecipe::to_string() const {
  std::string out = kind + "(";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i];
  return out + ")";
}

GraphDocument generate(const GeneratorRecipe& recipe, std::uint64_t seed) {
  Rng rng(seed);
  GraphDocument doc;
  doc.graph = build(recipe, rng);
  doc.source = recipe.to_string();
  return doc;
}

GraphDocument generate(std::string_view recipe, std::uint64_t seed) {
  return generate(GeneratorRecipe::parse(recipe), seed);
}

}  // namespace berge
