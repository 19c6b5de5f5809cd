#ifndef CRA_METRIC_H_
#define CRA_METRIC_H_

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace cra {

// Relative comparison tolerance. Every geometric comparison in the library
// uses kRelativeTolerance * diameter as its absolute slack.
inline constexpr double kRelativeTolerance = 1e-9;

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double w = 0.0;
};

struct WeightedGraph {
  int n = 0;
  std::vector<WeightedEdge> edges;
};

// Dense symmetric distance matrix. Immutable once built; the source the
// distances were derived from is kept so instances can be serialized back.
class MetricSpace {
 public:
  struct EuclideanSource {
    std::vector<Point> points;
  };
  struct GraphSource {
    WeightedGraph graph;
  };
  using Source = std::variant<EuclideanSource, GraphSource>;

  // Builds from an explicit matrix (row-major n*n). Used for sub-metrics;
  // the matrix is trusted to be symmetric with a zero diagonal.
  MetricSpace(int n, std::vector<double> dist, Source source, bool collinear);

  int size() const { return n_; }
  double operator()(int i, int j) const {
    return dist_[static_cast<std::size_t>(i) * n_ + j];
  }
  std::span<const double> row(int i) const {
    return {dist_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }

  bool is_euclidean() const {
    return std::holds_alternative<EuclideanSource>(source_);
  }
  bool is_graph() const { return std::holds_alternative<GraphSource>(source_); }
  // Only meaningful for Euclidean metrics; false for graphs.
  bool collinear() const { return collinear_; }
  const Source& source() const { return source_; }
  // Empty for graph metrics.
  std::span<const Point> points() const;

  double diameter() const { return diameter_; }
  // Absolute slack used for every comparison on this metric.
  double tolerance() const;

 private:
  int n_;
  std::vector<double> dist_;
  Source source_;
  bool collinear_;
  double diameter_;
};

MetricSpace BuildEuclidean(std::span<const Point> points);
MetricSpace BuildGraphMetric(const WeightedGraph& graph);

double Diameter(const MetricSpace& metric);

struct Instance {
  MetricSpace metric;
  // Per-point radius upper bounds; +infinity entries mean unbounded.
  std::optional<std::vector<double>> caps;

  int size() const { return metric.size(); }
  double cap(int i) const { return caps ? (*caps)[i] : kUnbounded; }
};

// Checks the cap vector against the metric (length n, entries >= 0, no NaN).
Instance MakeInstance(MetricSpace metric,
                      std::optional<std::vector<double>> caps = std::nullopt);

}  // namespace cra

#endif  // CRA_METRIC_H_
