#ifndef CRA_JSON_IO_H_
#define CRA_JSON_IO_H_

#include <string>
#include <string_view>

#include "cra/metric.h"
#include "cra/solution.h"
#include "cra/tree.h"

namespace cra {

// Instance files:
//   {"kind":"points","points":[[x,y],...],"caps":[c0,...]|null}
//   {"kind":"graph","n":N,"edges":[[u,v,w],...],"caps":[...]|null}
// For graphs "n" is optional (defaults to the largest index + 1). A null
// entry inside "caps" means that point is unbounded. Non-finite numbers are
// rejected. Malformed input throws Error(kParse).
Instance ParseInstance(std::string_view text);
std::string InstanceToJson(const Instance& inst);

// Tree files: [[u,v],...].
ConnectivityTree ParseTree(std::string_view text, int n);
std::string TreeToJson(const ConnectivityTree& tree);

// {"value":..,"radii":[..],"tree":[[u,v],..]|null,"lower_bound":..,
//  "method":"..","elapsed_ms":..}; "heuristic":true is appended only for
// budget-limited searches.
std::string ReportToJson(const SolveReport& report);
SolveReport ParseReport(std::string_view text);

// Accepts either a report object (its "radii") or a bare array of radii.
RadiusAssignment ParseRadii(std::string_view text);

std::string ValidationToJson(const ValidationReport& report);

}  // namespace cra

#endif  // CRA_JSON_IO_H_
