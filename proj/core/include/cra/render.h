#ifndef CRA_RENDER_H_
#define CRA_RENDER_H_

#include <string>

#include "cra/metric.h"
#include "cra/solution.h"

namespace cra {

// Static SVG of the points, the solution's circles and its certificate tree.
// Euclidean instances only; throws kInvalidArgument for graph metrics.
std::string RenderSvg(const Instance& inst, const SolveReport& report,
                      int width_px = 640);

}  // namespace cra

#endif  // CRA_RENDER_H_
