#include "cra/tree_solver.h"

#include <algorithm>
#include <chrono>

#include "cra/error.h"

namespace cra {
namespace internal {

TreeLpResult TreeLpSolver::Solve(const TreeLp& lp, std::vector<double>* radii,
                                 double cutoff) {
  const int n = static_cast<int>(lp.order.size());
  cost_.resize(n);
  pending_.resize(n);
  has_pending_.assign(n, false);
  child_min_sum_.assign(n, 0.0);

  auto floor_of = [&](int v) { return lp.floor.empty() ? 0.0 : lp.floor[v]; };
  auto cap_of = [&](int v) { return lp.cap.empty() ? kUnbounded : lp.cap[v]; };

  double frontier = 0.0;
  for (int idx = n - 1; idx >= 0; --idx) {
    const int v = lp.order[idx];
    ConvexPwl g = ConvexPwl::Affine(1.0, 0.0, floor_of(v), cap_of(v));
    if (has_pending_[v]) g = g + pending_[v];
    if (g.empty()) return {TreeLpStatus::kInfeasible, 0.0};
    const double best = g.Minimize().value;
    // Finished subtrees are disjoint, so their minima add up to a bound.
    frontier += best - child_min_sum_[v];
    if (frontier > cutoff) return {TreeLpStatus::kCutoff, frontier};

    const int p = lp.parent[v];
    if (p >= 0) {
      child_min_sum_[p] += best;
      ConvexPwl up = g.SuffixMin().Reflect(lp.edge_length[v]);
      if (has_pending_[p]) {
        pending_[p] = pending_[p] + up;
      } else {
        pending_[p] = std::move(up);
        has_pending_[p] = true;
      }
    }
    cost_[v] = std::move(g);
  }

  std::vector<double> local(n, 0.0);
  std::vector<double>& r = radii ? *radii : local;
  r.assign(n, 0.0);
  double total = 0.0;
  for (int idx = 0; idx < n; ++idx) {
    const int v = lp.order[idx];
    const ConvexPwl& g = cost_[v];
    const double first_best = g.Minimize(lp.tie_tol).lo;
    double lower = g.domain_lo();
    if (lp.parent[v] >= 0) {
      lower = std::max(lower, lp.edge_length[v] - r[lp.parent[v]]);
    }
    r[v] = std::min(std::max(lower, first_best), g.domain_hi());
    r[v] = std::max(r[v], 0.0);
    total += r[v];
  }
  return {TreeLpStatus::kOptimal, total};
}

}  // namespace internal

SolveReport SolveTree(const Instance& inst, const ConnectivityTree& tree) {
  const auto start = std::chrono::steady_clock::now();
  const int n = inst.size();
  if (tree.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "tree does not span the instance's points");
  }
  const RootedTree rooted = Root(n, tree.edges(), tree.root());
  std::vector<double> lengths(n, 0.0);
  for (int v = 0; v < n; ++v) {
    if (rooted.parent[v] >= 0) lengths[v] = inst.metric(v, rooted.parent[v]);
  }
  std::vector<double> caps;
  if (inst.caps) caps = *inst.caps;

  internal::TreeLp lp{rooted.parent, rooted.order, lengths, {}, caps,
                      inst.metric.tolerance()};
  std::vector<double> radii;
  internal::TreeLpSolver solver;
  internal::TreeLpResult result = solver.Solve(lp, &radii);
  if (result.status != internal::TreeLpStatus::kOptimal) {
    throw Error(ErrorCode::kInfeasible, "infeasible caps");
  }

  // Prefer an optimum with every leaf at radius zero. Top-down smallest
  // choices can leave a leaf positive when its parent stopped short.
  const std::vector<bool> leaves = tree.Leaves();
  std::vector<double> pinned_caps(n, kUnbounded);
  if (inst.caps) pinned_caps = *inst.caps;
  bool any_leaf_positive = false;
  for (int v = 0; v < n; ++v) {
    if (leaves[v]) {
      pinned_caps[v] = 0.0;
      any_leaf_positive = any_leaf_positive || radii[v] > 0.0;
    }
  }
  if (any_leaf_positive) {
    lp.cap = pinned_caps;
    std::vector<double> pinned;
    const internal::TreeLpResult alt = solver.Solve(lp, &pinned);
    if (alt.status == internal::TreeLpStatus::kOptimal &&
        alt.value <= result.value + inst.metric.tolerance()) {
      result = alt;
      radii = std::move(pinned);
    }
  }
  SolveReport report;
  report.value = result.value;
  report.assignment.radii = std::move(radii);
  report.tree = tree;
  report.lower_bound = DiameterLowerBound(inst);
  report.method = "tree";
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace cra
