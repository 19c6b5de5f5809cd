#include "cra/kcircle.h"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "cra/error.h"
#include "cra/exact_solver.h"
#include "cra/tree_solver.h"

namespace cra {
namespace {

using Clock = std::chrono::steady_clock;

SolveReport Finish(const Instance& inst, std::vector<double> radii,
                   std::string method, double ratio, Clock::time_point start) {
  SolveReport report;
  report.assignment.radii = std::move(radii);
  report.value = report.assignment.Cost();
  report.method = std::move(method);
  report.lower_bound = DiameterLowerBound(inst);
  // Without caps the approximation guarantee turns the heuristic value into
  // a certified bound on the optimum.
  if (!inst.caps && ratio > 0.0) {
    report.lower_bound = std::max(report.lower_bound, report.value / ratio);
  }
  const ConnectivityGraph h = BuildConnectivityGraph(inst, report.assignment);
  if (h.IsConnected()) report.tree = h.SpanningTree();
  report.elapsed = Clock::now() - start;
  return report;
}

bool NextCombination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

// Branch and bound over (center set S, tree on S, coverage of non-centers).
// For fixed S and tree, assigning non-center j to center c raises c's floor
// to dist(c, j); the tree LP value only grows with the floors, so every
// partial assignment's LP value bounds its completions.
class KCircleSearch {
 public:
  KCircleSearch(const Instance& inst, int k, const KCircleOptions& options)
      : inst_(inst),
        n_(inst.size()),
        k_(k),
        tol_(inst.metric.tolerance()),
        budget_(options.max_evaluations) {}

  void Seed(const std::vector<double>& radii, double value) {
    if (value < best_value_) {
      best_value_ = value;
      best_radii_ = radii;
    }
  }

  void Run() {
    const double global_lb = DiameterLowerBound(inst_);
    std::vector<int> centers(k_);
    std::iota(centers.begin(), centers.end(), 0);
    do {
      if (best_value_ <= global_lb + tol_) return;  // provably optimal
      if (stopped_) return;
      SearchCenters(centers, global_lb);
    } while (NextCombination(centers, n_));
  }

  bool exhausted() const { return exhausted_; }
  double best_value() const { return best_value_; }
  const std::vector<double>& best_radii() const { return best_radii_; }

 private:
  void SearchCenters(const std::vector<int>& centers, double global_lb) {
    centers_ = centers;
    std::vector<bool> is_center(n_, false);
    for (int c : centers_) is_center[c] = true;
    noncenters_.clear();
    double cover_lb = 0.0;
    for (int j = 0; j < n_; ++j) {
      if (is_center[j]) continue;
      double nearest = kUnbounded;
      bool reachable = false;
      for (int c : centers_) {
        nearest = std::min(nearest, inst_.metric(c, j));
        reachable = reachable || inst_.metric(c, j) <= inst_.cap(c);
      }
      if (!reachable) return;
      cover_lb = std::max(cover_lb, nearest);
      noncenters_.push_back(j);
    }
    if (std::max(cover_lb, global_lb) >= best_value_ - tol_) return;

    // Most constrained non-centers first; each tries its nearest center first.
    std::vector<double> nearest(n_, kUnbounded);
    for (int j : noncenters_) {
      for (int c : centers_) nearest[j] = std::min(nearest[j], inst_.metric(c, j));
    }
    std::stable_sort(noncenters_.begin(), noncenters_.end(),
                     [&](int a, int b) { return nearest[a] > nearest[b]; });
    choices_.assign(noncenters_.size(), {});
    for (std::size_t i = 0; i < noncenters_.size(); ++i) {
      const int j = noncenters_[i];
      std::vector<int>& options = choices_[i];
      for (int local = 0; local < k_; ++local) {
        if (inst_.metric(centers_[local], j) <= inst_.cap(centers_[local])) {
          options.push_back(local);
        }
      }
      std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
        return inst_.metric(centers_[a], j) < inst_.metric(centers_[b], j);
      });
    }

    caps_.assign(k_, kUnbounded);
    for (int local = 0; local < k_; ++local) caps_[local] = inst_.cap(centers_[local]);

    if (k_ == 1) {
      SearchTree({});
      return;
    }
    std::vector<int> sequence(k_ - 2, 0);
    while (!stopped_) {
      SearchTree(PruferDecode(sequence, k_));
      int pos = k_ - 3;
      while (pos >= 0 && ++sequence[pos] == k_) sequence[pos--] = 0;
      if (pos < 0) break;
    }
  }

  void SearchTree(const std::vector<Edge>& edges) {
    rooted_ = Root(k_, edges, 0);
    lengths_.assign(k_, 0.0);
    for (int v = 0; v < k_; ++v) {
      const int p = rooted_.parent[v];
      if (p >= 0) lengths_[v] = inst_.metric(centers_[v], centers_[p]);
    }
    floors_.assign(k_, 0.0);
    const internal::TreeLpResult base = Evaluate();
    if (base.status != internal::TreeLpStatus::kOptimal) return;
    if (!exhausted_) {
      Branch(0);
      if (!exhausted_) return;
      floors_.assign(k_, 0.0);
    }
    Greedy();
  }

  internal::TreeLpResult Evaluate(std::vector<double>* radii = nullptr) {
    ++evaluations_;
    if (evaluations_ > budget_) exhausted_ = true;
    if (evaluations_ > 2 * budget_) stopped_ = true;
    internal::TreeLp lp{rooted_.parent, rooted_.order, lengths_, floors_,
                        caps_, tol_};
    return solver_.Solve(lp, radii, best_value_ - tol_);
  }

  void Branch(std::size_t depth) {
    if (depth == noncenters_.size()) {
      Record();
      return;
    }
    const int j = noncenters_[depth];
    for (int local = 0; local < k_; ++local) {
      if (floors_[local] >= inst_.metric(centers_[local], j) - tol_) {
        Branch(depth + 1);  // already covered at no extra cost
        return;
      }
    }
    for (int local : choices_[depth]) {
      if (exhausted_) return;
      const double saved = floors_[local];
      floors_[local] = inst_.metric(centers_[local], j);
      if (Evaluate().status == internal::TreeLpStatus::kOptimal) {
        Branch(depth + 1);
      }
      floors_[local] = saved;
    }
  }

  void Greedy() {
    if (stopped_) return;
    for (std::size_t i = 0; i < noncenters_.size(); ++i) {
      if (choices_[i].empty()) return;
      const int local = choices_[i].front();
      floors_[local] = std::max(floors_[local],
                                inst_.metric(centers_[local], noncenters_[i]));
    }
    Record();
  }

  void Record() {
    std::vector<double> local;
    const internal::TreeLpResult r = Evaluate(&local);
    if (r.status != internal::TreeLpStatus::kOptimal) return;
    if (r.value >= best_value_ - tol_) return;
    best_value_ = r.value;
    best_radii_.assign(n_, 0.0);
    for (int v = 0; v < k_; ++v) best_radii_[centers_[v]] = local[v];
  }

  const Instance& inst_;
  const int n_;
  const int k_;
  const double tol_;
  const std::int64_t budget_;

  std::int64_t evaluations_ = 0;
  bool exhausted_ = false;
  bool stopped_ = false;
  double best_value_ = kUnbounded;
  std::vector<double> best_radii_;

  std::vector<int> centers_;
  std::vector<int> noncenters_;
  std::vector<std::vector<int>> choices_;
  std::vector<double> caps_;
  std::vector<double> floors_;
  std::vector<double> lengths_;
  RootedTree rooted_;
  internal::TreeLpSolver solver_;
};

}  // namespace

SolveReport BestOneCircle(const Instance& inst) {
  const auto start = Clock::now();
  const int n = inst.size();
  int center = -1;
  double best = kUnbounded;
  for (int i = 0; i < n; ++i) {
    const auto row = inst.metric.row(i);
    const double ecc = *std::max_element(row.begin(), row.end());
    if (ecc > inst.cap(i)) continue;
    if (ecc < best) {
      best = ecc;
      center = i;
    }
  }
  if (center < 0) {
    throw Error(ErrorCode::kInfeasible,
                "infeasible caps: no point can cover all others");
  }
  std::vector<double> radii(n, 0.0);
  radii[center] = best;
  return Finish(inst, std::move(radii), "best1", kOneCircleRatio, start);
}

SolveReport BestTwoCircle(const Instance& inst) {
  const auto start = Clock::now();
  const int n = inst.size();
  const MetricSpace& m = inst.metric;
  const double ratio =
      m.is_euclidean() && m.collinear() ? kTwoCircleLineRatio : kTwoCircleRatio;
  if (n == 1) return Finish(inst, {0.0}, "best2", ratio, start);

  // by_distance[a] lists all points in order of distance from a.
  std::vector<std::vector<int>> by_distance(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    std::iota(by_distance[a].begin(), by_distance[a].end(), 0);
    std::stable_sort(by_distance[a].begin(), by_distance[a].end(),
                     [&](int i, int j) { return m(a, i) < m(a, j); });
  }

  double best = kUnbounded;
  int best_a = -1, best_b = -1;
  double best_ra = 0.0, best_rb = 0.0;
  std::vector<double> uncovered_reach(n + 1);
  for (int a = 0; a < n; ++a) {
    const std::vector<int>& order = by_distance[a];
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const double dab = m(a, b);
      // Two centers are adjacent exactly when r_a + r_b >= dist(a, b): a
      // point covered by both would give dist(a, b) <= r_a + r_b anyway.
      if (inst.cap(a) + inst.cap(b) < dab) continue;
      uncovered_reach[n] = 0.0;
      for (int t = n - 1; t >= 0; --t) {
        uncovered_reach[t] = std::max(uncovered_reach[t + 1], m(b, order[t]));
      }
      // r_a sweeps the distances from a; b covers whatever is left. Between
      // consecutive candidates the total only grows, so this is exact.
      for (int t = 0; t <= n; ++t) {
        const double ra = t == 0 ? 0.0 : m(a, order[t - 1]);
        if (ra > inst.cap(a)) break;
        const double cover_b = uncovered_reach[t];
        if (cover_b > inst.cap(b)) continue;
        const double total = std::max(ra + cover_b, dab);
        if (total < best) {
          best = total;
          best_a = a;
          best_b = b;
          best_ra = ra;
          best_rb = std::max(cover_b, dab - ra);
          if (best_rb > inst.cap(b)) {
            best_rb = inst.cap(b);
            best_ra = dab - best_rb;
          }
        }
      }
    }
  }
  if (best_a < 0) {
    throw Error(ErrorCode::kInfeasible,
                "infeasible caps: no pair of centers covers the instance");
  }
  std::vector<double> radii(n, 0.0);
  radii[best_a] = best_ra;
  radii[best_b] = best_rb;
  return Finish(inst, std::move(radii), "best2", ratio, start);
}

SolveReport BestKCircle(const Instance& inst, int k,
                        const KCircleOptions& options) {
  const auto start = Clock::now();
  const int n = inst.size();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must lie in [1, " + std::to_string(n) + "], got " +
                    std::to_string(k));
  }
  KCircleSearch search(inst, k, options);
  try {
    SolveReport one = BestOneCircle(inst);
    search.Seed(one.assignment.radii, one.value);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasible) throw;
  }
  if (k >= 2) {
    try {
      SolveReport two = BestTwoCircle(inst);
      search.Seed(two.assignment.radii, two.value);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInfeasible) throw;
    }
  }
  search.Run();
  if (search.best_radii().empty()) {
    throw Error(ErrorCode::kInfeasible,
                search.exhausted()
                    ? "search budget exhausted without a feasible k-circle "
                      "solution"
                    : "infeasible caps: no feasible k-circle solution");
  }
  SolveReport report = Finish(inst, search.best_radii(), "bestk", 0.0, start);
  report.heuristic = search.exhausted();
  return report;
}

}  // namespace cra
