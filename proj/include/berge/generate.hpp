#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "berge/graph.hpp"
#include "berge/io.hpp"
#include "berge/structures.hpp"

namespace berge {

using Rng = std::mt19937_64;

Graph random_graph(int n, double p, Rng& rng);
Graph random_bipartite(int left, int right, double p, Rng& rng);

/// Samples G(n, p) until the result is Berge; gives up after max_tries.
Graph random_berge(int n, double p, Rng& rng, int max_tries = 100000);

struct TwoJoinSide {
  Graph graph;
  VertexSet a, b;
};

/// Disjoint union of the sides with A1 complete to A2 and B1 complete to B2.
/// Side 1 keeps its indices and side 2 follows. Raises InvalidInput unless
/// the result is a 2-join.
Graph glue_two_join(const TwoJoinSide& s1, const TwoJoinSide& s2, TwoJoin* out = nullptr);

/// A glued 2-join whose blocks are perfect and whose marker paths have the
/// same parity, so the composition is perfect. Each block has at most
/// max_block vertices.
struct PerfectTwoJoin {
  Graph graph;
  TwoJoin two_join;
};
PerfectTwoJoin random_perfect_two_join(int max_block, Rng& rng);

/// Recipes are written kind(arg, ...) and may nest:
///   cycle(n) antihole(n) path(n) complete(n) empty(n)
///   complete_bipartite(l, r) random_bipartite(l, r, p)
///   line_of_random_bipartite(l, r, p) complement_of(R)
///   replicate_in(R, v, copies) random_berge_rejection(n, p)
///   glue_two_join(R1, R2, A1, B1, A2, B2) with sets like 0+2
///   glue_two_join(R1, R2) with A_i = {0} and B_i = {last vertex}
///   glue_two_join(max_block) for a random perfect composition
/// Random kinds draw from one generator seeded with `seed`, in recipe order.
struct GeneratorRecipe {
  std::string kind;
  std::vector<std::string> args;  // raw argument text; nested recipes stay unparsed

  static GeneratorRecipe parse(std::string_view text);
  std::string to_string() const;
};

GraphDocument generate(const GeneratorRecipe& recipe, std::uint64_t seed);
GraphDocument generate(std::string_view recipe, std::uint64_t seed);

}  // namespace berge
