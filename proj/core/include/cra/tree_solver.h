#ifndef CRA_TREE_SOLVER_H_
#define CRA_TREE_SOLVER_H_

#include <span>
#include <vector>

#include "cra/convex_pwl.h"
#include "cra/metric.h"
#include "cra/solution.h"
#include "cra/tree.h"

namespace cra {

// Exact minimum of sum(r) subject to r_u + r_v >= dist(u, v) on every edge
// of `tree` and 0 <= r_i <= cap_i. Throws kInfeasible ("infeasible caps")
// when the caps admit no solution.
SolveReport SolveTree(const Instance& inst, const ConnectivityTree& tree);

// Independent check for SolveTree: enumerates, per node, every value a
// vertex of the feasible polytope can take (0, the cap, and alternating
// distance sums propagated along tree paths from such anchors), optionally
// augmented with the multiples of `grid`, and minimizes exactly over the
// product of those candidate sets. Throws kTooLarge when a node's candidate
// list would exceed kMaxOracleCandidates.
inline constexpr int kMaxOracleCandidates = 200000;
double SolveTreeOracle(const Instance& inst, const ConnectivityTree& tree,
                       double grid = 0.0);

namespace internal {

// A tree LP over local node ids. Node lower bounds ("floors") let the
// k-circle search force coverage radii onto centers.
struct TreeLp {
  std::span<const int> parent;          // -1 at the root
  std::span<const int> order;           // BFS order, root first
  std::span<const double> edge_length;  // distance to parent; root ignored
  std::span<const double> floor;        // empty: all zero
  std::span<const double> cap;          // empty: unbounded
  double tie_tol = 0.0;
};

enum class TreeLpStatus { kOptimal, kInfeasible, kCutoff };

struct TreeLpResult {
  TreeLpStatus status = TreeLpStatus::kInfeasible;
  double value = 0.0;  // sum of the returned radii when optimal
};

// Bottom-up DP. Node v carries
//   g_v(x) = x + sum_c min{ g_c(y) : y >= dist(v, c) - x }
// on [floor_v, cap_v]; every g_v is convex piecewise linear. The inner
// minimization is a suffix minimum followed by a reflection, so each child
// contributes one ConvexPwl to its parent.
//
// The sum of finished subtree minima is a lower bound on the total; the
// solve stops with kCutoff as soon as it exceeds `cutoff`. Backtracking picks
// the smallest optimal radius at every node.
class TreeLpSolver {
 public:
  TreeLpResult Solve(const TreeLp& lp, std::vector<double>* radii,
                     double cutoff = kUnbounded);

 private:
  std::vector<ConvexPwl> cost_;
  std::vector<ConvexPwl> pending_;
  std::vector<bool> has_pending_;
  std::vector<double> child_min_sum_;
};

}  // namespace internal
}  // namespace cra

#endif  // CRA_TREE_SOLVER_H_
