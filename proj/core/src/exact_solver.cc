#include "cra/exact_solver.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>

#include "cra/error.h"
#include "cra/tree_solver.h"

namespace cra {
namespace {

struct PartitionResult {
  double best = kUnbounded;
  std::vector<Edge> best_edges;
  double sum = 0.0;
  std::int64_t count = 0;
  std::int64_t feasible = 0;
};

std::vector<Edge> Canonical(std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

void LowerTo(std::atomic<double>& target, double value) {
  double current = target.load(std::memory_order_relaxed);
  while (value < current &&
         !target.compare_exchange_weak(current, value,
                                       std::memory_order_relaxed)) {
  }
}

// Scans every Prufer sequence whose first symbol is `first` (all sequences
// when n == 2). Pruned trees are strictly worse than some tree already seen,
// so the minimizer does not depend on scheduling.
void ScanPartition(const Instance& inst, int first, bool prune,
                   bool collect_stats, std::atomic<double>& incumbent,
                   PartitionResult& out) {
  const int n = inst.size();
  const double tol = inst.metric.tolerance();
  std::vector<double> caps;
  if (inst.caps) caps = *inst.caps;
  std::vector<int> sequence(std::max(0, n - 2), 0);
  if (!sequence.empty()) sequence[0] = first;
  std::vector<double> lengths(n, 0.0);
  internal::TreeLpSolver solver;

  while (true) {
    std::vector<Edge> edges = PruferDecode(sequence, n);
    const RootedTree rooted = Root(n, edges, n - 1);
    for (int v = 0; v < n; ++v) {
      const int p = rooted.parent[v];
      lengths[v] = p >= 0 ? inst.metric(v, p) : 0.0;
    }
    internal::TreeLp lp{rooted.parent, rooted.order, lengths, {}, caps, tol};
    const double cutoff =
        prune ? incumbent.load(std::memory_order_relaxed) + tol : kUnbounded;
    const internal::TreeLpResult r = solver.Solve(lp, nullptr, cutoff);
    ++out.count;
    if (r.status == internal::TreeLpStatus::kOptimal) {
      ++out.feasible;
      if (collect_stats) out.sum += r.value;
      if (r.value <= out.best) {
        std::vector<Edge> canonical = Canonical(std::move(edges));
        if (r.value < out.best || canonical < out.best_edges) {
          out.best = r.value;
          out.best_edges = std::move(canonical);
          LowerTo(incumbent, r.value);
        }
      }
    }
    int pos = n - 3;
    while (pos >= 1 && ++sequence[pos] == n) sequence[pos--] = 0;
    if (pos < 1) break;
  }
}

std::vector<PartitionResult> ScanAll(const Instance& inst,
                                     const ExactOptions& options,
                                     bool collect_stats) {
  const int n = inst.size();
  if (n > options.max_n) {
    throw Error(ErrorCode::kTooLarge,
                "enumeration too large: n=" + std::to_string(n) + " has " +
                    std::to_string(CountSpanningTrees(n)) +
                    " spanning trees (cap n=" + std::to_string(options.max_n) +
                    ")");
  }
  const int partitions = n > 2 ? n : 1;
  std::vector<PartitionResult> results(partitions);

  // A star at the minimum-eccentricity point is a feasible tree without
  // caps, so its value is a valid starting incumbent.
  double seed = kUnbounded;
  if (!inst.caps) {
    for (int i = 0; i < n; ++i) {
      const auto row = inst.metric.row(i);
      seed = std::min(seed, *std::max_element(row.begin(), row.end()));
    }
  }
  std::atomic<double> incumbent{options.prune && !collect_stats ? seed
                                                                : kUnbounded};
  const bool prune = options.prune && !collect_stats;

  std::atomic<int> next{0};
  auto work = [&] {
    for (int p = next++; p < partitions; p = next++) {
      ScanPartition(inst, p, prune, collect_stats, incumbent, results[p]);
    }
  };
  const int jobs = std::clamp(options.jobs, 1, partitions);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    for (int j = 0; j < jobs; ++j) workers.emplace_back(work);
  }
  return results;
}

const PartitionResult* BestOf(const std::vector<PartitionResult>& results) {
  const PartitionResult* best = nullptr;
  for (const PartitionResult& r : results) {
    if (r.best_edges.empty()) continue;
    if (!best || r.best < best->best ||
        (r.best == best->best && r.best_edges < best->best_edges)) {
      best = &r;
    }
  }
  return best;
}

SolveReport SinglePoint(const Instance& inst) {
  SolveReport report;
  report.assignment.radii = {0.0};
  report.tree = ConnectivityTree(1, {});
  report.method = "exact";
  (void)inst;
  return report;
}

}  // namespace

SolveReport ExactSolve(const Instance& inst, const ExactOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (inst.size() == 1) return SinglePoint(inst);
  const std::vector<PartitionResult> results = ScanAll(inst, options, false);
  const PartitionResult* best = BestOf(results);
  if (!best) {
    throw Error(ErrorCode::kInfeasible,
                "infeasible caps: every spanning tree violates them");
  }
  SolveReport report =
      SolveTree(inst, ConnectivityTree(inst.size(), best->best_edges));
  report.method = "exact";
  // The enumeration certifies optimality.
  report.lower_bound = std::min(report.value, best->best);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

TreeValueStats TreeValueStatistics(const Instance& inst,
                                   const ExactOptions& options) {
  if (inst.size() == 1) return {0.0, 0.0, 1, 1};
  const std::vector<PartitionResult> results = ScanAll(inst, options, true);
  TreeValueStats stats;
  double sum = 0.0;
  for (const PartitionResult& r : results) {
    sum += r.sum;
    stats.tree_count += r.count;
    stats.feasible_count += r.feasible;
  }
  const PartitionResult* best = BestOf(results);
  if (!best) {
    throw Error(ErrorCode::kInfeasible,
                "infeasible caps: every spanning tree violates them");
  }
  stats.opt = best->best;
  stats.mean_tree_value = sum / static_cast<double>(stats.feasible_count);
  return stats;
}

}  // namespace cra
