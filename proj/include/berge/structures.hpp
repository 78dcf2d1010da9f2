#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "berge/graph.hpp"
#include "berge/limits.hpp"

namespace berge {

/// V1, V2 partition V; A1-A2 and B1-B2 are complete and carry every edge
/// between the sides. V1 holds vertex 0 and the A pair holds the smaller
/// vertex of A1 u A2 u B1 u B2.
struct TwoJoin {
  VertexSet V1, V2;
  VertexSet A1, B1, A2, B2;

  bool operator==(const TwoJoin&) const = default;
};

/// X[0..3] are X1..X4, Y likewise. For i, j in 1..3, X_i is complete or
/// anticomplete to Y_j so that one representative per set induces a 6-hole;
/// X4 and Y4 see nothing on the other side.
struct SixJoin {
  std::array<VertexSet, 4> X, Y;

  bool operator==(const SixJoin&) const = default;
};

/// A complete to B, C anticomplete to D. A holds the smallest vertex of
/// A u B, C the smallest of C u D.
struct SkewPartition {
  VertexSet A, B, C, D;

  bool operator==(const SkewPartition&) const = default;
};

struct HomogeneousPair {
  VertexSet A1, A2, B;

  bool operator==(const HomogeneousPair&) const = default;
};

enum class CutsetTag { star, double_star, t_cutset, u_cutset, plain_skew };
std::string_view to_string(CutsetTag tag);

struct CutsetKind {
  CutsetTag tag;
  int u = -1;
  int v = -1;

  bool operator==(const CutsetKind&) const = default;
};

struct StarCutset {
  VertexSet cutset;
  int center = -1;
};

struct DoubleStarCutset {
  VertexSet cutset;
  int u = -1;
  int v = -1;
};

std::optional<TwoJoin> find_two_join(const Graph& g);
std::optional<SixJoin> find_six_join(const Graph& g, const Limits& limits = {});
std::optional<SkewPartition> find_skew_partition(const Graph& g, const Limits& limits = {});
/// With allow_empty_part, a homogeneous set comes back as A1 = A, A2 empty;
/// otherwise both parts are nonempty. Existence does not depend on the flag.
std::optional<HomogeneousPair> find_homogeneous_pair(const Graph& g, const Limits& limits = {},
                                                     bool allow_empty_part = false);
/// Smallest star cutset, ties broken by center then by the separated pair.
std::optional<StarCutset> find_star_cutset(const Graph& g);
/// Smallest double star cutset, ties broken by the edge uv then the pair.
std::optional<DoubleStarCutset> find_double_star_cutset(const Graph& g);

/// Every refinement that applies to sp, with witnesses. A pair u in A,
/// v in B always gives a double star, so plain_skew is reported when none
/// of star, T-cutset and U-cutset applies.
std::vector<CutsetKind> classify_cutset(const Graph& g, const SkewPartition& sp);

/// Every skew partition of g, A/B and C/D each unordered (A and C hold the
/// smaller vertex). Returning true from visit stops the scan.
void for_each_skew_partition(const Graph& g, const std::function<bool(const SkewPartition&)>& visit,
                             const Limits& limits = {});
std::optional<std::pair<SkewPartition, CutsetKind>> find_t_cutset(const Graph& g, const Limits& limits = {});
std::optional<std::pair<SkewPartition, CutsetKind>> find_u_cutset(const Graph& g, const Limits& limits = {});

// Witness checks, written directly from the definitions.
bool is_two_join(const Graph& g, const TwoJoin& tj);
bool is_six_join(const Graph& g, const SixJoin& sj);
bool is_skew_partition(const Graph& g, const SkewPartition& sp);
bool is_homogeneous_pair(const Graph& g, const HomogeneousPair& hp);
bool is_star_cutset(const Graph& g, const VertexSet& s, int center);
bool is_double_star_cutset(const Graph& g, const VertexSet& s, int u, int v);
bool is_t_cutset(const Graph& g, const SkewPartition& sp, int u, int v);
bool is_u_cutset(const Graph& g, const SkewPartition& sp, int u, int v);

}  // namespace berge
