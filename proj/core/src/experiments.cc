#include "cra/experiments.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <thread>

#include "cra/error.h"
#include "cra/exact_solver.h"
#include "cra/instance_gen.h"
#include "cra/kcircle.h"

namespace cra {
namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ExperimentRow RunOne(int n, int trial, std::uint64_t master) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentRow row;
  row.n = n;
  row.trial = trial;
  row.seed = DeriveSeed(master, static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(trial));
  const Instance inst = GenUniformDisk(n, 1.0, row.seed);
  row.opt = ExactSolve(inst).value;
  row.best1 = BestOneCircle(inst).value;
  row.best2 = BestTwoCircle(inst).value;
  row.mean_tree_value = TreeValueStatistics(inst).mean_tree_value;
  if (row.opt > 0.0) {
    row.ratio_best1 = row.best1 / row.opt;
    row.ratio_best2 = row.best2 / row.opt;
    row.ratio_mean_tree = row.mean_tree_value / row.opt;
  }
  row.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return row;
}

}  // namespace

std::vector<ExperimentRow> RunTrials(std::span<const int> n_values, int trials,
                                     std::uint64_t seed, int jobs) {
  for (int n : n_values) {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
    if (n > kDefaultEnumerationCap) {
      throw Error(ErrorCode::kTooLarge,
                  "enumeration too large: n=" + std::to_string(n) + " has " +
                      std::to_string(CountSpanningTrees(n)) +
                      " spanning trees (cap n=" +
                      std::to_string(kDefaultEnumerationCap) + ")");
    }
  }
  std::vector<std::pair<int, int>> tasks;
  for (int n : n_values) {
    for (int t = 0; t < trials; ++t) tasks.emplace_back(n, t);
  }
  std::sort(tasks.begin(), tasks.end());
  tasks.erase(std::unique(tasks.begin(), tasks.end()), tasks.end());

  std::vector<ExperimentRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      rows[i] = RunOne(tasks[i].first, tasks[i].second, seed);
    }
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    for (int j = 0; j < jobs; ++j) workers.emplace_back(work);
  }
  return rows;
}

std::vector<SummaryRow> Summarize(std::span<const ExperimentRow> rows) {
  std::map<int, SummaryRow> by_n;
  for (const ExperimentRow& r : rows) {
    SummaryRow& s = by_n[r.n];
    s.n = r.n;
    ++s.trials;
    s.mean_ratio_best1 += r.ratio_best1;
    s.mean_ratio_best2 += r.ratio_best2;
    s.mean_ratio_mean_tree += r.ratio_mean_tree;
    s.max_ratio_best1 = std::max(s.max_ratio_best1, r.ratio_best1);
    s.max_ratio_best2 = std::max(s.max_ratio_best2, r.ratio_best2);
    s.max_ratio_mean_tree = std::max(s.max_ratio_mean_tree, r.ratio_mean_tree);
  }
  std::vector<SummaryRow> out;
  for (auto& [n, s] : by_n) {
    s.mean_ratio_best1 /= s.trials;
    s.mean_ratio_best2 /= s.trials;
    s.mean_ratio_mean_tree /= s.trials;
    out.push_back(s);
  }
  return out;
}

void WriteCsv(std::ostream& out, std::span<const ExperimentRow> rows,
              bool include_elapsed) {
  out << kExperimentCsvHeader << '\n';
  for (const ExperimentRow& r : rows) {
    out << r.n << ',' << r.trial << ',' << r.seed << ',' << Num(r.opt) << ','
        << Num(r.best1) << ',' << Num(r.best2) << ','
        << Num(r.mean_tree_value) << ',' << Num(r.ratio_best1) << ','
        << Num(r.ratio_best2) << ',' << Num(r.ratio_mean_tree) << ','
        << (include_elapsed ? Num(r.elapsed_ms) : std::string("0")) << '\n';
  }
}

void WriteSummaryMarkdown(std::ostream& out,
                          std::span<const SummaryRow> summary) {
  char buf[256];
  out << "| n | trials | mean best1/opt | max best1/opt | mean best2/opt | "
         "max best2/opt | mean tree/opt | max tree/opt |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const SummaryRow& s : summary) {
    std::snprintf(buf, sizeof(buf),
                  "| %d | %d | %.4f | %.4f | %.4f | %.4f | %.4f | %.4f |\n",
                  s.n, s.trials, s.mean_ratio_best1, s.max_ratio_best1,
                  s.mean_ratio_best2, s.max_ratio_best2,
                  s.mean_ratio_mean_tree, s.max_ratio_mean_tree);
    out << buf;
  }
}

}  // namespace cra
