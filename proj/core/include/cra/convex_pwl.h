#ifndef CRA_CONVEX_PWL_H_
#define CRA_CONVEX_PWL_H_

#include <vector>

namespace cra {

// Convex piecewise-linear function on an interval of the real line, taking
// +infinity outside its domain. Stored as knots with strictly increasing x
// and linear interpolation between them; beyond the first and last knot the
// function continues with left_slope / right_slope. A left slope of -inf
// (right slope of +inf) closes the domain at the end knot.
//
// A default-constructed function has an empty domain.
class ConvexPwl {
 public:
  struct Knot {
    double x = 0.0;
    double y = 0.0;
  };

  // Minimum value and the closed interval of minimizers. Ends may be
  // infinite when the function is flat towards that side.
  struct Minimum {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
  };

  ConvexPwl() = default;
  ConvexPwl(std::vector<Knot> knots, double left_slope, double right_slope);

  // x -> slope * x + intercept on [lo, hi]; either end may be infinite.
  static ConvexPwl Affine(double slope, double intercept, double lo,
                          double hi);

  bool empty() const { return knots_.empty(); }
  double domain_lo() const;
  double domain_hi() const;
  double left_slope() const { return left_slope_; }
  double right_slope() const { return right_slope_; }
  const std::vector<Knot>& knots() const { return knots_; }

  double Evaluate(double x) const;

  // Knots within tie_tol of the minimum count as minimizers. Throws
  // std::domain_error when empty or unbounded below.
  Minimum Minimize(double tie_tol = 0.0) const;

  // t -> min over y >= t of f(y).
  ConvexPwl SuffixMin() const;

  // x -> f(pivot - x).
  ConvexPwl Reflect(double pivot) const;

  // Intersects the domain with [lo, hi].
  ConvexPwl Restrict(double lo, double hi) const;

  friend ConvexPwl operator+(const ConvexPwl& a, const ConvexPwl& b);

  // Slopes (including the end slopes) are nondecreasing within tol.
  bool IsConvex(double tol = 0.0) const;

 private:
  std::vector<Knot> knots_;
  double left_slope_ = 0.0;
  double right_slope_ = 0.0;
};

}  // namespace cra

#endif  // CRA_CONVEX_PWL_H_
