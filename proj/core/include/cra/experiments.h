#ifndef CRA_EXPERIMENTS_H_
#define CRA_EXPERIMENTS_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace cra {

struct ExperimentRow {
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  double opt = 0.0;
  double best1 = 0.0;
  double best2 = 0.0;
  double mean_tree_value = 0.0;
  double ratio_best1 = 1.0;
  double ratio_best2 = 1.0;
  double ratio_mean_tree = 1.0;
  double elapsed_ms = 0.0;
};

inline constexpr char kExperimentCsvHeader[] =
    "n,trial,seed,opt,best1,best2,mean_tree_value,ratio_best1,ratio_best2,"
    "ratio_mean_tree,elapsed_ms";

// One uniform-unit-disk instance per (n, trial), seeded with
// DeriveSeed(seed, n, trial). Output is sorted by (n, trial) and does not
// depend on `jobs`.
std::vector<ExperimentRow> RunTrials(std::span<const int> n_values, int trials,
                                     std::uint64_t seed, int jobs = 1);

struct SummaryRow {
  int n = 0;
  int trials = 0;
  double mean_ratio_best1 = 0.0;
  double max_ratio_best1 = 0.0;
  double mean_ratio_best2 = 0.0;
  double max_ratio_best2 = 0.0;
  double mean_ratio_mean_tree = 0.0;
  double max_ratio_mean_tree = 0.0;
};

std::vector<SummaryRow> Summarize(std::span<const ExperimentRow> rows);

void WriteCsv(std::ostream& out, std::span<const ExperimentRow> rows,
              bool include_elapsed = true);
void WriteSummaryMarkdown(std::ostream& out,
                          std::span<const SummaryRow> summary);

}  // namespace cra

#endif  // CRA_EXPERIMENTS_H_
