#include "cra/metric.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cra/error.h"

namespace cra {
namespace {

double MaxEntry(std::span<const double> dist) {
  double best = 0.0;
  for (double d : dist) best = std::max(best, d);
  return best;
}

// Points are collinear when every point lies within the shared tolerance of
// the line through a diameter pair.
bool AreCollinear(std::span<const Point> points,
                  const std::vector<double>& dist, double diameter) {
  const int n = static_cast<int>(points.size());
  if (n <= 2 || diameter == 0.0) return true;
  int a = 0, b = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist[static_cast<std::size_t>(i) * n + j] == diameter) {
        a = i;
        b = j;
        i = n;
        break;
      }
    }
  }
  const double dx = points[b].x - points[a].x;
  const double dy = points[b].y - points[a].y;
  const double slack = kRelativeTolerance * diameter;
  for (const Point& p : points) {
    const double cross = dx * (p.y - points[a].y) - dy * (p.x - points[a].x);
    if (std::abs(cross) / diameter > slack) return false;
  }
  return true;
}

}  // namespace

MetricSpace::MetricSpace(int n, std::vector<double> dist, Source source,
                         bool collinear)
    : n_(n),
      dist_(std::move(dist)),
      source_(std::move(source)),
      collinear_(collinear),
      diameter_(MaxEntry(dist_)) {}

std::span<const Point> MetricSpace::points() const {
  if (const auto* e = std::get_if<EuclideanSource>(&source_)) return e->points;
  return {};
}

double MetricSpace::tolerance() const {
  return kRelativeTolerance * (diameter_ > 0.0 ? diameter_ : 1.0);
}

MetricSpace BuildEuclidean(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::kInvalidArgument, "empty instance");
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite coordinate");
    }
  }
  const int n = static_cast<int>(points.size());
  std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d =
          std::hypot(points[i].x - points[j].x, points[i].y - points[j].y);
      dist[static_cast<std::size_t>(i) * n + j] = d;
      dist[static_cast<std::size_t>(j) * n + i] = d;
    }
  }
  const double diameter = MaxEntry(dist);
  const bool collinear = AreCollinear(points, dist, diameter);
  return MetricSpace(
      n, std::move(dist),
      MetricSpace::EuclideanSource{{points.begin(), points.end()}}, collinear);
}

MetricSpace BuildGraphMetric(const WeightedGraph& graph) {
  const int n = graph.n;
  if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "empty instance");
  std::vector<double> dist(static_cast<std::size_t>(n) * n, kUnbounded);
  auto at = [&](int i, int j) -> double& {
    return dist[static_cast<std::size_t>(i) * n + j];
  };
  for (int i = 0; i < n; ++i) at(i, i) = 0.0;
  for (const WeightedEdge& e : graph.edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") is out of range or a self-loop");
    }
    if (!std::isfinite(e.w) || e.w <= 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge weights must be positive and finite");
    }
    at(e.u, e.v) = std::min(at(e.u, e.v), e.w);
    at(e.v, e.u) = at(e.u, e.v);
  }
  // Floyd-Warshall; instances are small enough for the cubic pass.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const double dik = at(i, k);
      if (dik == kUnbounded) continue;
      for (int j = 0; j < n; ++j) {
        const double through = dik + at(k, j);
        if (through < at(i, j)) at(i, j) = through;
      }
    }
  }
  for (double d : dist) {
    if (d == kUnbounded) {
      throw Error(ErrorCode::kInvalidArgument, "disconnected graph");
    }
  }
  return MetricSpace(n, std::move(dist), MetricSpace::GraphSource{graph},
                     /*collinear=*/false);
}

double Diameter(const MetricSpace& metric) { return metric.diameter(); }

Instance MakeInstance(MetricSpace metric,
                      std::optional<std::vector<double>> caps) {
  if (caps) {
    if (static_cast<int>(caps->size()) != metric.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "caps length " + std::to_string(caps->size()) +
                      " does not match point count " +
                      std::to_string(metric.size()));
    }
    for (double c : *caps) {
      if (std::isnan(c) || c < 0.0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "caps must be nonnegative numbers");
      }
    }
  }
  return Instance{std::move(metric), std::move(caps)};
}

}  // namespace cra
