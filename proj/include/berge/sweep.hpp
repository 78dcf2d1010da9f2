#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "berge/limits.hpp"

namespace berge {

/// Executable theorem checks run over seeded samples:
///   pgt            perfect(g) == perfect(complement) == Lovasz bound
///   spgt           perfect(g) == Berge(g)
///   two_join_color perfect 2-join compositions color with chi colors and
///                  every block coloring meets its intersection count
///   replication    replicated perfect graphs stay perfect
///   hoang          odd holes and antiholes up to n carry none of the
///                  forbidden structures (deterministic, samples ignored)
///   konig          bipartite edge colorings use Delta colors
///   decomposition  Berge graphs decompose
///   wonderful      every Wonderful Lemma instance has an outcome
///   square_free    square-free Berge graphs satisfy their disjunction
///   odd_hole_free  odd-hole-free graphs satisfy their disjunction
///   wheel_free     Berge graphs without proper wheels or stretchers are
///                  basic or have a skew partition
std::vector<std::string_view> sweep_theorems();

struct SweepOptions {
  std::string theorem;
  int n = 8;
  int samples = 1000;
  std::uint64_t seed = 1;
  int threads = 0;          // 0 means hardware concurrency
  bool exhaustive = false;  // pgt/spgt: every labeled graph on n vertices; replication: every unlabeled one
  Limits limits;
};

struct SampleResult {
  int index = 0;
  std::uint64_t seed = 0;
  std::string graph6;
  bool applicable = true;  // false when the sample misses the hypothesis
  bool ok = true;
  bool internal = false;   // failure came from InternalInconsistency
  int instances = 0;       // sub-cases checked (Wonderful instances, replications, ...)
  std::string detail;
};

struct SweepReport {
  std::string theorem;
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  int applicable = 0;
  int passed = 0;
  int failed = 0;
  long long instances = 0;
  double seconds = 0;
  std::vector<SampleResult> failures;  // ordered by sample index

  bool ok() const { return failed == 0; }
};

/// Seed of sample i, derived from the master seed only.
std::uint64_t sample_seed(std::uint64_t master, int index);

/// Runs the sweep on worker threads. `on_result`, when given, sees every
/// sample in index order after the run.
SweepReport run_sweep(const SweepOptions& options,
                      const std::function<void(const SampleResult&)>& on_result = {});

}  // namespace berge
