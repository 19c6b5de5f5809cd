#include "cra/instance_gen.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "cra/error.h"
#include "cra/exact_solver.h"
#include "cra/kcircle.h"

namespace cra {
namespace {

std::uint64_t SplitMix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void RequirePositiveCount(int n, int minimum) {
  if (n < minimum) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator needs at least " + std::to_string(minimum) +
                    " points");
  }
}

double KCircleValue(const Instance& inst, int k) {
  if (k == 1) return BestOneCircle(inst).value;
  if (k == 2) return BestTwoCircle(inst).value;
  return BestKCircle(inst, k).value;
}

}  // namespace

double Rng::Normal() {
  const double u = 1.0 - Uniform();  // (0, 1]
  const double v = Uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b) {
  return SplitMix64(SplitMix64(SplitMix64(seed) ^ a) ^ b);
}

Instance GenUniformDisk(int n, double radius, std::uint64_t seed) {
  RequirePositiveCount(n, 1);
  if (!(radius > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "disk radius must be positive");
  }
  Rng rng(seed);
  std::vector<Point> points;
  points.reserve(n);
  while (static_cast<int>(points.size()) < n) {
    const double x = rng.Uniform(-radius, radius);
    const double y = rng.Uniform(-radius, radius);
    if (x * x + y * y <= radius * radius) points.push_back({x, y});
  }
  return MakeInstance(BuildEuclidean(points));
}

Instance GenCollinear(int n, double length, std::uint64_t seed) {
  RequirePositiveCount(n, 2);
  if (!(length > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "line length must be positive");
  }
  Rng rng(seed);
  std::vector<Point> points(n);
  for (Point& p : points) p = {rng.Uniform(0.0, length), 0.0};
  return MakeInstance(BuildEuclidean(points));
}

Instance GenRandomGraph(int n, double extra_edge_prob, std::uint64_t seed) {
  RequirePositiveCount(n, 1);
  Rng rng(seed);
  WeightedGraph g{n, {}};
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  // Random attachment order gives a uniformly shuffled spanning tree.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.Below(static_cast<std::uint64_t>(i) + 1)]);
  }
  for (int i = 1; i < n; ++i) {
    const int u = order[i];
    const int v = order[rng.Below(static_cast<std::uint64_t>(i))];
    g.edges.push_back({u, v, rng.Uniform(0.1, 1.0)});
    present[u][v] = present[v][u] = true;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (present[u][v]) continue;
      if (rng.Uniform() < extra_edge_prob) {
        g.edges.push_back({u, v, rng.Uniform(0.1, 1.0)});
      }
    }
  }
  return MakeInstance(BuildGraphMetric(g));
}

LowerBoundFamily GenKCircleLowerBoundFamily(int k) {
  if (k < 1 || k > 40) {
    throw Error(ErrorCode::kInvalidArgument, "family parameter k must be in [1, 40]");
  }
  std::vector<Point> points{{0.0, 0.0}};
  for (int i = 0; i <= k; ++i) {
    points.push_back({3.0 * std::ldexp(1.0, i) - 2.0, 0.0});
  }
  points.push_back({std::ldexp(1.0, k + 2) - 2.0, 0.0});
  const double opt = std::ldexp(1.0, k + 1) - 1.0;
  return {MakeInstance(BuildEuclidean(points)), opt, 1.0 + 1.0 / opt};
}

double GuaranteedRatioBound(int k, bool collinear) {
  if (k <= 1) return kOneCircleRatio;
  return collinear ? kTwoCircleLineRatio : kTwoCircleRatio;
}

WorstRatio SearchWorstRatio(int k, int n, bool collinear, std::int64_t budget,
                            std::uint64_t seed) {
  RequirePositiveCount(n, 2);
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument, "k must lie in [1, n]");
  }
  if (n > kDefaultEnumerationCap) {
    throw Error(ErrorCode::kTooLarge,
                "search needs exact optima; n must be at most " +
                    std::to_string(kDefaultEnumerationCap));
  }
  budget = std::max<std::int64_t>(budget, 1);
  Rng rng(seed);

  auto random_points = [&] {
    std::vector<Point> pts(n);
    for (Point& p : pts) {
      if (collinear) {
        p = {rng.Uniform(), 0.0};
      } else {
        do {
          p = {rng.Uniform(-1.0, 1.0), rng.Uniform(-1.0, 1.0)};
        } while (p.x * p.x + p.y * p.y > 1.0);
      }
    }
    return pts;
  };

  WorstRatio best{MakeInstance(BuildEuclidean(random_points())), 0.0, 0};
  auto evaluate = [&](const std::vector<Point>& pts) {
    ++best.evaluations;
    Instance inst = MakeInstance(BuildEuclidean(pts));
    const double opt = ExactSolve(inst).value;
    const double ratio =
        opt > inst.metric.tolerance() ? KCircleValue(inst, k) / opt : 1.0;
    if (ratio > best.ratio) {
      best.ratio = ratio;
      best.inst = std::move(inst);
    }
    return ratio;
  };

  constexpr int kStallLimit = 150;
  std::vector<Point> current;
  double current_ratio = 0.0;
  double step = 0.0;
  int stall = kStallLimit;
  while (best.evaluations < budget) {
    if (stall >= kStallLimit) {
      current = random_points();
      current_ratio = evaluate(current);
      step = 0.2;
      stall = 0;
      continue;
    }
    std::vector<Point> trial = current;
    Point& p = trial[rng.Below(static_cast<std::uint64_t>(n))];
    p.x += step * rng.Normal();
    if (!collinear) p.y += step * rng.Normal();
    const double ratio = evaluate(trial);
    if (ratio >= current_ratio) {
      stall = ratio > current_ratio ? 0 : stall + 1;
      current = std::move(trial);
      current_ratio = ratio;
    } else {
      ++stall;
      step = std::max(step * 0.97, 1e-4);
    }
  }
  return best;
}

}  // namespace cra
