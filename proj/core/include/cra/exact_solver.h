#ifndef CRA_EXACT_SOLVER_H_
#define CRA_EXACT_SOLVER_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cra/metric.h"
#include "cra/solution.h"
#include "cra/tree.h"

namespace cra {

inline constexpr int kDefaultEnumerationCap = 8;

// n^(n-2), Cayley's count of labeled trees on n vertices.
std::int64_t CountSpanningTrees(int n);

// Decodes a Prufer sequence of length n-2 over {0..n-1}.
std::vector<Edge> PruferDecode(std::span<const int> sequence, int n);

// Visits each labeled spanning tree of K_n exactly once, in lexicographic
// order of Prufer sequences. Returns the number visited. Throws kTooLarge
// when n exceeds max_n and kInvalidArgument when n < 2.
std::int64_t EnumerateSpanningTrees(
    int n, const std::function<void(const ConnectivityTree&)>& visit,
    int max_n = kDefaultEnumerationCap);

struct ExactOptions {
  int max_n = kDefaultEnumerationCap;
  // Worker threads over Prufer-prefix partitions; results do not depend on it.
  int jobs = 1;
  // Abandon a tree once its partial DP bound exceeds the incumbent.
  bool prune = true;
};

// Global optimum: the minimum over all spanning trees of the tree optimum.
// Ties go to the lexicographically smallest tree.
SolveReport ExactSolve(const Instance& inst, const ExactOptions& options = {});

struct TreeValueStats {
  double opt = 0.0;
  double mean_tree_value = 0.0;  // over trees feasible under the caps
  std::int64_t tree_count = 0;
  std::int64_t feasible_count = 0;
};

TreeValueStats TreeValueStatistics(const Instance& inst,
                                   const ExactOptions& options = {});

}  // namespace cra

#endif  // CRA_EXACT_SOLVER_H_
