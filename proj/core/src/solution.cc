#include "cra/solution.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "cra/error.h"

namespace cra {
namespace {

void CheckLength(const Instance& inst, const RadiusAssignment& a) {
  if (a.size() != inst.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "assignment has " + std::to_string(a.size()) +
                    " radii for an instance of " +
                    std::to_string(inst.size()) + " points");
  }
}

// Coordinates along the line through a diameter pair.
std::vector<double> LineCoordinates(const MetricSpace& metric) {
  const std::span<const Point> pts = metric.points();
  const int n = metric.size();
  std::vector<double> t(n, 0.0);
  if (n < 2 || metric.diameter() == 0.0) return t;
  int a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (metric(i, j) == metric.diameter()) {
        a = i;
        b = j;
        i = n;
        break;
      }
    }
  }
  const double dx = (pts[b].x - pts[a].x) / metric.diameter();
  const double dy = (pts[b].y - pts[a].y) / metric.diameter();
  for (int i = 0; i < n; ++i) {
    t[i] = (pts[i].x - pts[a].x) * dx + (pts[i].y - pts[a].y) * dy;
  }
  return t;
}

void RequireLine(const Instance& inst) {
  if (!inst.metric.is_euclidean() || !inst.metric.collinear()) {
    throw Error(ErrorCode::kInvalidArgument, "line-only operation");
  }
}

double Overlap(const std::vector<double>& t, const RadiusAssignment& a) {
  double worst = 0.0;
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    if (a.radii[i] <= 0.0) continue;
    for (int j = i + 1; j < n; ++j) {
      if (a.radii[j] <= 0.0) continue;
      const double lo = std::max(t[i] - a.radii[i], t[j] - a.radii[j]);
      const double hi = std::min(t[i] + a.radii[i], t[j] + a.radii[j]);
      worst = std::max(worst, hi - lo);
    }
  }
  return worst;
}

// One left-to-right sweep over coordinates t. The frontier only moves right;
// each kept interval starts exactly at the frontier.
RadiusAssignment SweepLine(const std::vector<double>& t,
                           const RadiusAssignment& a, double tol) {
  const int n = a.size();
  std::vector<int> by_position(n);
  std::iota(by_position.begin(), by_position.end(), 0);
  std::stable_sort(by_position.begin(), by_position.end(),
                   [&](int i, int j) { return t[i] < t[j]; });
  const double rightmost = t[by_position.back()];

  double frontier = t[by_position.front()];
  for (int i = 0; i < n; ++i) frontier = std::min(frontier, t[i] - a.radii[i]);

  RadiusAssignment out{std::vector<double>(n, 0.0)};
  for (int i : by_position) {
    if (a.radii[i] <= 0.0) continue;
    if (rightmost <= frontier + tol) break;
    if (t[i] < frontier - tol) continue;  // already inside the chain
    const double r = std::max(0.0, t[i] - frontier);
    out.radii[i] = r;
    frontier = std::max(frontier, t[i] + r);
  }
  for (int i : by_position) {
    if (t[i] <= frontier + tol) continue;
    const double r = t[i] - frontier;
    out.radii[i] += r;
    frontier = t[i] + r;
  }
  return out;
}

}  // namespace

double RadiusAssignment::Cost() const {
  return std::accumulate(radii.begin(), radii.end(), 0.0);
}

int RadiusAssignment::PositiveCount() const {
  return static_cast<int>(
      std::count_if(radii.begin(), radii.end(), [](double r) { return r > 0; }));
}

bool ConnectivityGraph::IsConnected() const {
  if (n <= 1) return true;
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  int components = n;
  for (const auto& [u, v] : edges) {
    const int ru = find(u), rv = find(v);
    if (ru != rv) {
      uf[ru] = rv;
      --components;
    }
  }
  return components == 1;
}

ConnectivityTree ConnectivityGraph::SpanningTree() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> queue{0};
  std::vector<Edge> tree;
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      tree.emplace_back(v, w);
      queue.push_back(w);
    }
  }
  return ConnectivityTree(n, std::move(tree));
}

ConnectivityGraph BuildConnectivityGraph(const Instance& inst,
                                         const RadiusAssignment& a) {
  CheckLength(inst, a);
  const MetricSpace& m = inst.metric;
  const double tol = m.tolerance();
  ConnectivityGraph g;
  g.n = m.size();
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (m(i, j) <= a.radii[i] + a.radii[j] + tol) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

ValidationReport Validate(const Instance& inst, const RadiusAssignment& a) {
  ValidationReport report;
  if (a.size() != inst.size()) {
    report.violations.push_back(
        {-1, 0.0, 0.0,
         "assignment length " + std::to_string(a.size()) + " != " +
             std::to_string(inst.size())});
    return report;
  }
  const double tol = inst.metric.tolerance();
  for (int i = 0; i < a.size(); ++i) {
    const double r = a.radii[i];
    if (!(r >= 0.0)) {
      report.violations.push_back({i, r, inst.cap(i), "negative radius"});
    } else if (r > inst.cap(i) + tol) {
      report.violations.push_back({i, r, inst.cap(i), "radius exceeds cap"});
    }
  }
  report.cost = a.Cost();
  report.connected = BuildConnectivityGraph(inst, a).IsConnected();
  return report;
}

double DiameterLowerBound(const Instance& inst) {
  return inst.metric.diameter() / 2.0;
}

double MaxLineOverlap(const Instance& inst, const RadiusAssignment& a) {
  RequireLine(inst);
  CheckLength(inst, a);
  return Overlap(LineCoordinates(inst.metric), a);
}

RadiusAssignment NormalizeLineSolution(const Instance& inst,
                                       const RadiusAssignment& a) {
  RequireLine(inst);
  CheckLength(inst, a);
  if (!BuildConnectivityGraph(inst, a).IsConnected()) {
    throw Error(ErrorCode::kInvalidArgument,
                "line normalization needs a connected assignment");
  }
  const double tol = inst.metric.tolerance();
  std::vector<double> t = LineCoordinates(inst.metric);
  const double cost = a.Cost();

  auto acceptable = [&](const RadiusAssignment& out,
                        const std::vector<double>& coords) {
    return out.Cost() <= cost + tol && Overlap(coords, out) <= tol &&
           BuildConnectivityGraph(inst, out).IsConnected();
  };

  RadiusAssignment forward = SweepLine(t, a, tol);
  const bool forward_ok = acceptable(forward, t);

  std::vector<double> mirrored(t.size());
  std::transform(t.begin(), t.end(), mirrored.begin(),
                 [](double x) { return -x; });
  RadiusAssignment backward = SweepLine(mirrored, a, tol);
  const bool backward_ok = acceptable(backward, mirrored);

  if (forward_ok && (!backward_ok || forward.Cost() <= backward.Cost())) {
    return forward;
  }
  if (backward_ok) return backward;
  throw Error(ErrorCode::kInvalidArgument,
              "overlap sweep would raise the cost; input is not optimal");
}

}  // namespace cra
