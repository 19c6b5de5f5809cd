#include "cra/json_io.h"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "cra/error.h"

namespace cra {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json Parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
}

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

double Finite(const json& j, const char* what) {
  if (!j.is_number()) Fail(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) Fail(std::string(what) + " must be finite");
  return v;
}

int Index(const json& j, const char* what) {
  if (!j.is_number_integer()) Fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Fail(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

ordered EdgesJson(const std::vector<Edge>& edges) {
  ordered out = ordered::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

std::vector<Edge> EdgesFrom(const json& j) {
  if (!j.is_array()) Fail("tree must be an array of [u,v] pairs");
  std::vector<Edge> edges;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2) Fail("tree edges must be [u,v] pairs");
    edges.emplace_back(Index(e[0], "tree vertex"), Index(e[1], "tree vertex"));
  }
  return edges;
}

std::vector<double> NumbersFrom(const json& j, const char* what) {
  if (!j.is_array()) Fail(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& v : j) out.push_back(Finite(v, what));
  return out;
}

ConnectivityTree TreeFrom(const json& j, int n) {
  try {
    return ConnectivityTree(n, EdgesFrom(j));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    Fail(e.what());
  }
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  const json j = Parse(text);
  if (!j.is_object()) Fail("instance must be a JSON object");
  const std::string kind = Field(j, "kind").is_string()
                               ? Field(j, "kind").get<std::string>()
                               : std::string();

  std::optional<std::vector<double>> caps;
  if (j.contains("caps") && !j.at("caps").is_null()) {
    const json& c = j.at("caps");
    if (!c.is_array()) Fail("caps must be an array or null");
    caps.emplace();
    for (const json& v : c) {
      caps->push_back(v.is_null() ? kUnbounded : Finite(v, "cap"));
    }
  }

  try {
    if (kind == "points") {
      if (j.contains("edges")) Fail("points instance must not carry edges");
      std::vector<Point> points;
      for (const json& p : Field(j, "points")) {
        if (!p.is_array() || p.size() != 2) Fail("points must be [x,y] pairs");
        points.push_back({Finite(p[0], "coordinate"), Finite(p[1], "coordinate")});
      }
      return MakeInstance(BuildEuclidean(points), std::move(caps));
    }
    if (kind == "graph") {
      if (j.contains("points")) Fail("graph instance must not carry points");
      WeightedGraph g;
      int max_index = -1;
      for (const json& e : Field(j, "edges")) {
        if (!e.is_array() || e.size() != 3) Fail("edges must be [u,v,w] triples");
        WeightedEdge edge{Index(e[0], "edge endpoint"),
                          Index(e[1], "edge endpoint"), Finite(e[2], "weight")};
        max_index = std::max({max_index, edge.u, edge.v});
        g.edges.push_back(edge);
      }
      if (j.contains("n")) {
        g.n = Index(j.at("n"), "n");
      } else {
        g.n = std::max(max_index + 1, caps ? static_cast<int>(caps->size()) : 0);
      }
      return MakeInstance(BuildGraphMetric(g), std::move(caps));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, std::string("invalid instance: ") + e.what());
  }
  Fail("instance kind must be \"points\" or \"graph\"");
}

std::string InstanceToJson(const Instance& inst) {
  ordered j;
  if (const auto* e =
          std::get_if<MetricSpace::EuclideanSource>(&inst.metric.source())) {
    j["kind"] = "points";
    ordered pts = ordered::array();
    for (const Point& p : e->points) pts.push_back({p.x, p.y});
    j["points"] = std::move(pts);
  } else {
    const auto& g = std::get<MetricSpace::GraphSource>(inst.metric.source()).graph;
    j["kind"] = "graph";
    j["n"] = g.n;
    ordered edges = ordered::array();
    for (const WeightedEdge& e : g.edges) edges.push_back({e.u, e.v, e.w});
    j["edges"] = std::move(edges);
  }
  if (inst.caps) {
    ordered caps = ordered::array();
    for (double c : *inst.caps) {
      if (std::isfinite(c)) {
        caps.push_back(c);
      } else {
        caps.push_back(nullptr);
      }
    }
    j["caps"] = std::move(caps);
  } else {
    j["caps"] = nullptr;
  }
  return j.dump();
}

ConnectivityTree ParseTree(std::string_view text, int n) {
  return TreeFrom(Parse(text), n);
}

std::string TreeToJson(const ConnectivityTree& tree) {
  return EdgesJson(tree.edges()).dump();
}

std::string ReportToJson(const SolveReport& report) {
  ordered j;
  j["value"] = report.value;
  j["radii"] = report.assignment.radii;
  j["tree"] = report.tree ? EdgesJson(report.tree->edges()) : ordered(nullptr);
  j["lower_bound"] = report.lower_bound;
  j["method"] = report.method;
  j["elapsed_ms"] = report.elapsed.count();
  if (report.heuristic) j["heuristic"] = true;
  return j.dump();
}

SolveReport ParseReport(std::string_view text) {
  const json j = Parse(text);
  SolveReport r;
  r.value = Finite(Field(j, "value"), "value");
  r.assignment.radii = NumbersFrom(Field(j, "radii"), "radius");
  const json& tree = Field(j, "tree");
  if (!tree.is_null()) r.tree = TreeFrom(tree, r.assignment.size());
  r.lower_bound = Finite(Field(j, "lower_bound"), "lower_bound");
  if (!Field(j, "method").is_string()) Fail("method must be a string");
  r.method = Field(j, "method").get<std::string>();
  r.elapsed = std::chrono::duration<double, std::milli>(
      Finite(Field(j, "elapsed_ms"), "elapsed_ms"));
  r.heuristic = j.value("heuristic", false);
  return r;
}

RadiusAssignment ParseRadii(std::string_view text) {
  const json j = Parse(text);
  if (j.is_array()) return {NumbersFrom(j, "radius")};
  return {NumbersFrom(Field(j, "radii"), "radius")};
}

std::string ValidationToJson(const ValidationReport& report) {
  ordered j;
  j["connected"] = report.connected;
  j["cost"] = report.cost;
  ordered violations = ordered::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"index", v.index},
                          {"radius", v.radius},
                          {"cap", std::isfinite(v.cap) ? ordered(v.cap) : ordered(nullptr)},
                          {"message", v.message}});
  }
  j["violations"] = std::move(violations);
  return j.dump();
}

}  // namespace cra
