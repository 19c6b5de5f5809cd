#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cra/error.h"
#include "cra/tree_solver.h"

namespace cra {
namespace {

struct Adjacency {
  std::vector<std::vector<int>> next;
};

Adjacency MakeAdjacency(int n, const std::vector<Edge>& edges) {
  Adjacency adj{std::vector<std::vector<int>>(n)};
  for (const auto& [u, v] : edges) {
    adj.next[u].push_back(v);
    adj.next[v].push_back(u);
  }
  return adj;
}

// Values reachable by walking the tree from `anchor` with r(anchor) = start
// and every traversed edge tight: r(w) = dist(w, prev) - r(prev).
void Propagate(const Instance& inst, const Adjacency& adj, int anchor,
               double start, std::vector<std::vector<double>>& candidates) {
  const int n = inst.size();
  std::vector<double> value(n, 0.0);
  std::vector<int> prev(n, -1);
  std::vector<int> stack{anchor};
  value[anchor] = start;
  prev[anchor] = anchor;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    candidates[v].push_back(value[v]);
    for (int w : adj.next[v]) {
      if (prev[w] != -1) continue;
      prev[w] = v;
      value[w] = inst.metric(v, w) - value[v];
      stack.push_back(w);
    }
  }
}

}  // namespace

double SolveTreeOracle(const Instance& inst, const ConnectivityTree& tree,
                       double grid) {
  const int n = inst.size();
  if (tree.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "tree does not span the instance's points");
  }
  const double tol = inst.metric.tolerance();
  const Adjacency adj = MakeAdjacency(n, tree.edges());

  std::vector<std::vector<double>> candidates(n);
  for (int u = 0; u < n; ++u) {
    Propagate(inst, adj, u, 0.0, candidates);
    if (std::isfinite(inst.cap(u))) {
      Propagate(inst, adj, u, inst.cap(u), candidates);
    }
  }
  if (grid > 0.0) {
    const double reach = inst.metric.diameter();
    for (int v = 0; v < n; ++v) {
      const double top = std::min(inst.cap(v), reach);
      const double steps = std::floor(top / grid);
      if (steps + candidates[v].size() > kMaxOracleCandidates) {
        throw Error(ErrorCode::kTooLarge,
                    "oracle candidate set too large: " +
                        std::to_string(static_cast<long long>(steps)) +
                        " grid values at node " + std::to_string(v));
      }
      for (long long k = 0; k <= static_cast<long long>(steps); ++k) {
        candidates[v].push_back(static_cast<double>(k) * grid);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    auto& c = candidates[v];
    const double cap = inst.cap(v);
    std::erase_if(c, [&](double r) { return r < 0.0 || r > cap; });
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }

  // Exhaustive minimization over the candidate product. The objective is
  // separable along the tree, so the product is scanned one edge at a time:
  // best[v][i] is the cheapest completion of v's subtree with r_v = cand[i].
  const RootedTree rooted = Root(n, tree.edges(), tree.root());
  std::vector<std::vector<double>> best(n);
  for (int idx = n - 1; idx >= 0; --idx) {
    const int v = rooted.order[idx];
    const auto& cand = candidates[v];
    std::vector<double>& b = best[v];
    b.assign(cand.begin(), cand.end());
    for (int c : adj.next[v]) {
      if (c == rooted.parent[v]) continue;
      const auto& child = candidates[c];
      std::vector<double> suffix(child.size() + 1, kUnbounded);
      for (int j = static_cast<int>(child.size()) - 1; j >= 0; --j) {
        suffix[j] = std::min(suffix[j + 1], best[c][j]);
      }
      const double d = inst.metric(v, c);
      for (std::size_t i = 0; i < cand.size(); ++i) {
        const double need = d - cand[i] - tol;
        const auto it = std::lower_bound(child.begin(), child.end(), need);
        b[i] += suffix[it - child.begin()];
      }
    }
  }
  const auto& root_best = best[rooted.order.front()];
  const double value =
      root_best.empty() ? kUnbounded
                        : *std::min_element(root_best.begin(), root_best.end());
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kInfeasible, "infeasible caps");
  }
  return value;
}

}  // namespace cra
