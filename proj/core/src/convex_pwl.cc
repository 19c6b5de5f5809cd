#include "cra/convex_pwl.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace cra {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Drops interior knots where the slope does not change, so repeated
// suffix-min / reflect / add rounds keep only real breakpoints.
void DropCollinear(std::vector<ConvexPwl::Knot>& knots) {
  if (knots.size() < 3) return;
  std::size_t out = 1;
  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    const ConvexPwl::Knot& a = knots[out - 1];
    const ConvexPwl::Knot& b = knots[i];
    const ConvexPwl::Knot& c = knots[i + 1];
    const double left = (b.y - a.y) / (b.x - a.x);
    const double right = (c.y - b.y) / (c.x - b.x);
    const double scale = std::max({1.0, std::abs(left), std::abs(right)});
    if (std::abs(right - left) > 1e-12 * scale) knots[out++] = b;
  }
  knots[out++] = knots.back();
  knots.resize(out);
}

}  // namespace

ConvexPwl::ConvexPwl(std::vector<Knot> knots, double left_slope,
                     double right_slope)
    : knots_(std::move(knots)),
      left_slope_(left_slope),
      right_slope_(right_slope) {}

ConvexPwl ConvexPwl::Affine(double slope, double intercept, double lo,
                            double hi) {
  if (!(lo <= hi)) return {};
  std::vector<Knot> knots;
  if (std::isfinite(lo)) knots.push_back({lo, slope * lo + intercept});
  if (std::isfinite(hi) && hi != lo) knots.push_back({hi, slope * hi + intercept});
  if (knots.empty()) knots.push_back({0.0, intercept});
  return ConvexPwl(std::move(knots), std::isfinite(lo) ? -kInf : slope,
                   std::isfinite(hi) ? kInf : slope);
}

double ConvexPwl::domain_lo() const {
  if (empty()) return kInf;
  return left_slope_ == -kInf ? knots_.front().x : -kInf;
}

double ConvexPwl::domain_hi() const {
  if (empty()) return -kInf;
  return right_slope_ == kInf ? knots_.back().x : kInf;
}

double ConvexPwl::Evaluate(double x) const {
  if (empty()) return kInf;
  const Knot& first = knots_.front();
  const Knot& last = knots_.back();
  if (x < first.x) {
    return left_slope_ == -kInf ? kInf : first.y + left_slope_ * (x - first.x);
  }
  if (x > last.x) {
    return right_slope_ == kInf ? kInf : last.y + right_slope_ * (x - last.x);
  }
  auto it = std::lower_bound(
      knots_.begin(), knots_.end(), x,
      [](const Knot& k, double v) { return k.x < v; });
  if (it->x == x) return it->y;
  const Knot& right = *it;
  const Knot& left = *(it - 1);
  const double w = (x - left.x) / (right.x - left.x);
  return left.y + w * (right.y - left.y);
}

ConvexPwl::Minimum ConvexPwl::Minimize(double tie_tol) const {
  if (empty()) throw std::domain_error("minimizing an empty function");
  if (left_slope_ > 0.0 || right_slope_ < 0.0) {
    throw std::domain_error("function is unbounded below");
  }
  double best = kInf;
  for (const Knot& k : knots_) best = std::min(best, k.y);
  std::size_t first = knots_.size(), last = 0;
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (knots_[i].y <= best + tie_tol) {
      first = std::min(first, i);
      last = i;
    }
  }
  Minimum m{best, knots_[first].x, knots_[last].x};
  if (first == 0 && left_slope_ == 0.0) m.lo = -kInf;
  if (last + 1 == knots_.size() && right_slope_ == 0.0) m.hi = kInf;
  return m;
}

ConvexPwl ConvexPwl::SuffixMin() const {
  const Minimum m = Minimize();
  if (m.hi == kInf) return ConvexPwl({{knots_.back().x, m.value}}, 0.0, 0.0);
  std::vector<Knot> knots{{m.hi, m.value}};
  for (const Knot& k : knots_) {
    if (k.x > m.hi) knots.push_back(k);
  }
  DropCollinear(knots);
  return ConvexPwl(std::move(knots), 0.0, right_slope_);
}

ConvexPwl ConvexPwl::Reflect(double pivot) const {
  if (empty()) return {};
  std::vector<Knot> knots;
  knots.reserve(knots_.size());
  for (auto it = knots_.rbegin(); it != knots_.rend(); ++it) {
    knots.push_back({pivot - it->x, it->y});
  }
  return ConvexPwl(std::move(knots), -right_slope_, -left_slope_);
}

ConvexPwl ConvexPwl::Restrict(double lo, double hi) const {
  if (empty()) return {};
  const double new_lo = std::max(lo, domain_lo());
  const double new_hi = std::min(hi, domain_hi());
  if (!(new_lo <= new_hi)) return {};
  std::vector<Knot> knots;
  if (std::isfinite(new_lo)) knots.push_back({new_lo, Evaluate(new_lo)});
  for (const Knot& k : knots_) {
    if (k.x > new_lo && k.x < new_hi) knots.push_back(k);
  }
  if (std::isfinite(new_hi) && new_hi != new_lo) {
    knots.push_back({new_hi, Evaluate(new_hi)});
  }
  if (knots.empty()) knots.push_back(knots_.front());
  return ConvexPwl(std::move(knots),
                   std::isfinite(new_lo) ? -kInf : left_slope_,
                   std::isfinite(new_hi) ? kInf : right_slope_);
}

ConvexPwl operator+(const ConvexPwl& a, const ConvexPwl& b) {
  if (a.empty() || b.empty()) return {};
  const double lo = std::max(a.domain_lo(), b.domain_lo());
  const double hi = std::min(a.domain_hi(), b.domain_hi());
  if (!(lo <= hi)) return {};

  std::vector<double> xs;
  xs.reserve(a.knots_.size() + b.knots_.size() + 2);
  if (std::isfinite(lo)) xs.push_back(lo);
  if (std::isfinite(hi)) xs.push_back(hi);
  for (const auto* f : {&a, &b}) {
    for (const ConvexPwl::Knot& k : f->knots_) {
      if (k.x > lo && k.x < hi) xs.push_back(k.x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<ConvexPwl::Knot> knots;
  knots.reserve(xs.size());
  for (double x : xs) knots.push_back({x, a.Evaluate(x) + b.Evaluate(x)});
  DropCollinear(knots);
  const double left =
      std::isfinite(lo) ? -kInf : a.left_slope_ + b.left_slope_;
  const double right =
      std::isfinite(hi) ? kInf : a.right_slope_ + b.right_slope_;
  return ConvexPwl(std::move(knots), left, right);
}

bool ConvexPwl::IsConvex(double tol) const {
  if (empty()) return true;
  double previous = left_slope_;
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i].x > knots_[i - 1].x)) return false;
    const double slope =
        (knots_[i].y - knots_[i - 1].y) / (knots_[i].x - knots_[i - 1].x);
    if (slope < previous - tol) return false;
    previous = slope;
  }
  return right_slope_ >= previous - tol;
}

}  // namespace cra
