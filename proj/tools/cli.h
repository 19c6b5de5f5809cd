#ifndef CRA_TOOLS_CLI_H_
#define CRA_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace cra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitUsage = 2;

// Runs the cra tool; args excludes the program name. Instance and report
// JSON are read from `in` when their file arguments are omitted and written
// to `out` when --out is omitted.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace cra::cli

#endif  // CRA_TOOLS_CLI_H_
