#ifndef CRA_KCIRCLE_H_
#define CRA_KCIRCLE_H_

#include <cstdint>

#include "cra/metric.h"
#include "cra/solution.h"

namespace cra {

// Certified approximation factors of the best k-circle solutions.
inline constexpr double kOneCircleRatio = 1.5;
inline constexpr double kTwoCircleRatio = 4.0 / 3.0;
inline constexpr double kTwoCircleLineRatio = 1.25;

// One circle at the point of minimum eccentricity; ties go to the smallest
// index. With caps, only centers whose cap reaches every point qualify.
SolveReport BestOneCircle(const Instance& inst);

// Exact best solution with at most two positive radii.
SolveReport BestTwoCircle(const Instance& inst);

struct KCircleOptions {
  // Tree-LP evaluations the exact search may spend before falling back to
  // nearest-center coverage for the remaining center sets.
  std::int64_t max_evaluations = 20'000'000;
};

// Best solution with at most k positive radii, centers drawn from the input
// points. Exact unless the report comes back with heuristic = true.
SolveReport BestKCircle(const Instance& inst, int k,
                        const KCircleOptions& options = {});

}  // namespace cra

#endif  // CRA_KCIRCLE_H_
