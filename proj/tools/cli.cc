#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "cra/error.h"
#include "cra/exact_solver.h"
#include "cra/experiments.h"
#include "cra/instance_gen.h"
#include "cra/json_io.h"
#include "cra/kcircle.h"
#include "cra/render.h"
#include "cra/tree_solver.h"

namespace cra::cli {
namespace {

constexpr char kFormats[] = R"(
Formats:
  instance  {"kind":"points","points":[[x,y],...],"caps":[c,...]|null}
            {"kind":"graph","n":N,"edges":[[u,v,w],...],"caps":[c,...]|null}
            (a null cap entry means unbounded)
  tree      [[u,v],...]
  report    {"value":..,"radii":[..],"tree":[[u,v],..]|null,
             "lower_bound":..,"method":"..","elapsed_ms":..}
  radii     a report, or a bare array [r0,r1,...]
  csv       n,trial,seed,opt,best1,best2,mean_tree_value,ratio_best1,
            ratio_best2,ratio_mean_tree,elapsed_ms

File arguments default to stdin and --out defaults to stdout.
Exit status: 0 success, 1 infeasible (or failed validation), 2 usage/parse error.
)";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadAll(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string ReadSource(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return ReadAll(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open " + path);
  return ReadAll(file);
}

void WriteSink(const std::string& path, const std::string& text,
               std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

struct Options {
  // gen
  std::string family = "uniform";
  int n = 8;
  double radius = 1.0;
  double length = 1.0;
  double edge_prob = 0.3;
  bool collinear = false;
  std::int64_t budget = 10000;
  // solve
  std::string method = "exact";
  std::string instance_path;
  std::string tree_path;
  int k = 2;
  int max_n = kDefaultEnumerationCap;
  std::int64_t max_evaluations = KCircleOptions{}.max_evaluations;
  // validate / render
  std::string radii_path;
  std::string report_path;
  int width = 640;
  // experiment
  std::vector<int> n_values{4, 5, 6, 7};
  int trials = 100;
  std::string summary_path;
  bool no_elapsed = false;
  // shared
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out_path;
};

int Gen(const Options& o, std::ostream& out, std::ostream& err) {
  Instance inst = [&] {
    if (o.family == "uniform") return GenUniformDisk(o.n, o.radius, o.seed);
    if (o.family == "line") return GenCollinear(o.n, o.length, o.seed);
    if (o.family == "graph") return GenRandomGraph(o.n, o.edge_prob, o.seed);
    if (o.family == "thm2") {
      LowerBoundFamily f = GenKCircleLowerBoundFamily(o.k);
      err << "expected optimum " << f.expected_opt
          << ", k-circle ratio at least " << f.expected_ratio_bound << '\n';
      return std::move(f.inst);
    }
    if (o.family == "search") {
      WorstRatio w = SearchWorstRatio(o.k, o.n, o.collinear, o.budget, o.seed);
      err << "worst ratio found " << w.ratio << " after " << w.evaluations
          << " evaluations\n";
      return std::move(w.inst);
    }
    throw UsageError("unknown family " + o.family);
  }();
  WriteSink(o.out_path, InstanceToJson(inst) + "\n", out);
  return kExitOk;
}

int Solve(const Options& o, std::istream& in, std::ostream& out,
          std::ostream& err) {
  if (o.method == "tree" && o.tree_path.empty()) {
    throw UsageError("--method tree needs --tree <file>");
  }
  const Instance inst = ParseInstance(ReadSource(o.instance_path, in));
  SolveReport report;
  if (o.method == "tree") {
    const ConnectivityTree tree =
        ParseTree(ReadSource(o.tree_path, in), inst.size());
    report = SolveTree(inst, tree);
  } else if (o.method == "exact") {
    if (inst.size() > kDefaultEnumerationCap && inst.size() <= o.max_n) {
      err << "note: enumerating " << CountSpanningTrees(inst.size())
          << " spanning trees\n";
    }
    report = ExactSolve(inst, {o.max_n, o.jobs, true});
  } else if (o.method == "best1") {
    report = BestOneCircle(inst);
  } else if (o.method == "best2") {
    report = BestTwoCircle(inst);
  } else if (o.method == "bestk") {
    report = BestKCircle(inst, o.k, {o.max_evaluations});
  } else {
    throw UsageError("unknown method " + o.method);
  }
  WriteSink(o.out_path, ReportToJson(report) + "\n", out);
  return kExitOk;
}

int ValidateCmd(const Options& o, std::istream& in, std::ostream& out) {
  if (o.instance_path.empty() && o.radii_path.empty()) {
    throw UsageError("validate needs an instance file (radii may come on stdin)");
  }
  const Instance inst = ParseInstance(ReadSource(o.instance_path, in));
  const RadiusAssignment radii = ParseRadii(ReadSource(o.radii_path, in));
  const ValidationReport report = Validate(inst, radii);
  WriteSink(o.out_path, ValidationToJson(report) + "\n", out);
  return report.ok() ? kExitOk : kExitInfeasible;
}

int Experiment(const Options& o, std::ostream& out) {
  const std::vector<ExperimentRow> rows =
      RunTrials(o.n_values, o.trials, o.seed, o.jobs);
  std::ostringstream csv;
  WriteCsv(csv, rows, !o.no_elapsed);
  WriteSink(o.out_path, csv.str(), out);
  if (!o.summary_path.empty()) {
    std::ostringstream md;
    WriteSummaryMarkdown(md, Summarize(rows));
    WriteSink(o.summary_path, md.str(), out);
  }
  return kExitOk;
}

int Search(const Options& o, std::ostream& out) {
  const WorstRatio w = SearchWorstRatio(o.k, o.n, o.collinear, o.budget, o.seed);
  nlohmann::ordered_json j;
  j["k"] = o.k;
  j["n"] = o.n;
  j["collinear"] = o.collinear;
  j["ratio"] = w.ratio;
  j["guaranteed_bound"] = GuaranteedRatioBound(o.k, o.collinear);
  j["evaluations"] = w.evaluations;
  j["instance"] = nlohmann::ordered_json::parse(InstanceToJson(w.inst));
  WriteSink(o.out_path, j.dump() + "\n", out);
  return kExitOk;
}

int Render(const Options& o, std::istream& in, std::ostream& out) {
  if (o.instance_path.empty()) throw UsageError("render needs an instance file");
  const Instance inst = ParseInstance(ReadSource(o.instance_path, in));
  const SolveReport report = ParseReport(ReadSource(o.report_path, in));
  WriteSink(o.out_path, RenderSvg(inst, report, o.width), out);
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Connected range assignment toolkit: choose radii so the disks "
               "form a connected graph with minimum total radius."};
  app.footer(kFormats);
  app.require_subcommand(1, 1);

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", o.family, "uniform|line|graph|thm2|search")
      ->check(CLI::IsMember({"uniform", "line", "graph", "thm2", "search"}));
  gen->add_option("--n", o.n, "Number of points")->check(CLI::PositiveNumber);
  gen->add_option("--radius", o.radius, "Disk radius (uniform)");
  gen->add_option("--length", o.length, "Segment length (line)");
  gen->add_option("--edge-prob", o.edge_prob, "Extra edge probability (graph)");
  gen->add_option("--k", o.k, "Family parameter (thm2) or circle count (search)");
  gen->add_flag("--collinear", o.collinear, "Search over collinear points");
  gen->add_option("--budget", o.budget, "Search evaluations");

  auto* solve = app.add_subcommand("solve", "Solve an instance; prints a report");
  solve->add_option("instance", o.instance_path, "Instance JSON (default stdin)");
  solve->add_option("--method", o.method, "tree|exact|best1|best2|bestk")
      ->check(CLI::IsMember({"tree", "exact", "best1", "best2", "bestk"}));
  solve->add_option("--tree", o.tree_path, "Tree JSON for --method tree");
  solve->add_option("--k", o.k, "Circle count for --method bestk");
  solve->add_option("--max-n", o.max_n, "Enumeration cap for --method exact");
  solve->add_option("--budget", o.max_evaluations,
                    "Tree-LP evaluations for --method bestk");

  auto* validate = app.add_subcommand("validate", "Check radii against an instance");
  validate->add_option("instance", o.instance_path, "Instance JSON")->required();
  validate->add_option("radii", o.radii_path, "Report or radii JSON (default stdin)");

  auto* experiment =
      app.add_subcommand("experiment", "Random-trial ratio study; writes CSV");
  experiment->add_option("--n", o.n_values, "Point counts")->delimiter(',');
  experiment->add_option("--trials", o.trials, "Trials per point count");
  experiment->add_option("--summary", o.summary_path, "Markdown summary table");
  experiment->add_flag("--no-elapsed", o.no_elapsed,
                       "Write 0 in the elapsed_ms column");

  auto* search = app.add_subcommand("search", "Search for worst k-circle ratios");
  search->add_option("--k", o.k, "Circle count");
  search->add_option("--n", o.n, "Points per instance");
  search->add_flag("--collinear", o.collinear, "Restrict to a line");
  search->add_option("--budget", o.budget, "Evaluations");

  auto* render = app.add_subcommand("render", "Draw a report as SVG");
  render->add_option("instance", o.instance_path, "Instance JSON")->required();
  render->add_option("report", o.report_path, "Report JSON (default stdin)");
  render->add_option("--width", o.width, "Image width in pixels");

  for (CLI::App* sub : {gen, solve, validate, experiment, search, render}) {
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out_path, "Output file (default stdout)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return Gen(o, out, err);
    if (*solve) return Solve(o, in, out, err);
    if (*validate) return ValidateCmd(o, in, out);
    if (*experiment) return Experiment(o, out);
    if (*search) return Search(o, out);
    if (*render) return Render(o, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kInfeasible:
        err << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
      case ErrorCode::kParse:
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
      case ErrorCode::kTooLarge:
        err << "too large: " << e.what() << '\n';
        return kExitUsage;
      case ErrorCode::kInvalidArgument:
        err << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace cra::cli
