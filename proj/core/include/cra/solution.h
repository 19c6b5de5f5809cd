#ifndef CRA_SOLUTION_H_
#define CRA_SOLUTION_H_

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "cra/metric.h"
#include "cra/tree.h"

namespace cra {

struct RadiusAssignment {
  std::vector<double> radii;

  int size() const { return static_cast<int>(radii.size()); }
  double Cost() const;
  int PositiveCount() const;
};

// Intersection graph of the closed disks. Touching disks are adjacent.
struct ConnectivityGraph {
  int n = 0;
  std::vector<Edge> edges;  // u < v, sorted

  bool IsConnected() const;
  // BFS spanning tree; requires IsConnected().
  ConnectivityTree SpanningTree() const;
};

ConnectivityGraph BuildConnectivityGraph(const Instance& inst,
                                         const RadiusAssignment& a);

struct Violation {
  int index = 0;
  double radius = 0.0;
  double cap = 0.0;
  std::string message;
};

struct ValidationReport {
  bool connected = false;
  double cost = 0.0;
  std::vector<Violation> violations;

  bool ok() const { return connected && violations.empty(); }
};

ValidationReport Validate(const Instance& inst, const RadiusAssignment& a);

struct SolveReport {
  double value = 0.0;
  RadiusAssignment assignment;
  std::optional<ConnectivityTree> tree;
  double lower_bound = 0.0;
  std::string method;
  std::chrono::duration<double, std::milli> elapsed{0.0};
  // Set when a search stopped on its budget; the value is then an upper
  // bound only.
  bool heuristic = false;
};

// OPT >= D/2: the connectivity graph contains a path between a diameter
// pair, and every edge on it needs r_u + r_v >= |uv|.
double DiameterLowerBound(const Instance& inst);

// Rewrites an optimal assignment on collinear points into one whose
// positive-radius intervals have pairwise disjoint interiors. Sweeps left to
// right, re-centering each interval so it starts exactly where the previous
// one ended; leftover points past the frontier get fresh intervals.
// Throws kInvalidArgument for non-collinear instances, disconnected input,
// or when the sweep would increase the cost (only possible when the input
// was not optimal).
RadiusAssignment NormalizeLineSolution(const Instance& inst,
                                       const RadiusAssignment& a);

// Largest pairwise interior overlap among positive-radius intervals of a
// collinear assignment, measured along the line.
double MaxLineOverlap(const Instance& inst, const RadiusAssignment& a);

}  // namespace cra

#endif  // CRA_SOLUTION_H_
