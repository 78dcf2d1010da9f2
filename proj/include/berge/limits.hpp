#pragma once

namespace berge {

/// Desk-scale bounds for the exponential searches. Inputs above a bound are
/// rejected with ResourceLimit rather than silently taking forever.
struct Limits {
  int clique = 32;             // clique_number, stability_number, chromatic_number
  int perfect = 12;            // is_perfect and friends (all induced subgraphs)
  int skew_partition = 16;
  int homogeneous_pair = 14;
  int six_join = 14;
  int wheel = 14;
  int stretcher = 14;
  int berge = 14;
};

/// Hard ceiling for every bitmask-based search.
inline constexpr int kMaskVertices = 64;

}  // namespace berge
