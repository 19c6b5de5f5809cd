#include "cra/json_io.h"

#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "cra/error.h"
#include "cra/instance_gen.h"
#include "cra/render.h"
#include "cra/tree_solver.h"
#include "test_util.h"

namespace cra {
namespace {

void ExpectParseError(const std::string& text) {
  try {
    ParseInstance(text);
    FAIL() << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse) << text << ": " << e.what();
  }
}

void ExpectSameMetric(const Instance& a, const Instance& b) {
  ASSERT_EQ(a.size(), b.size());
  for (int i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.cap(i), b.cap(i));
    for (int j = 0; j < a.size(); ++j) EXPECT_EQ(a.metric(i, j), b.metric(i, j));
  }
  EXPECT_EQ(a.metric.collinear(), b.metric.collinear());
  EXPECT_EQ(a.metric.is_graph(), b.metric.is_graph());
}

TEST(ParseInstance, Points) {
  const Instance inst = ParseInstance(R"({"kind":"points","points":[[0,0],[3,4]],"caps":null})");
  EXPECT_EQ(inst.metric(0, 1), 5.0);
  EXPECT_FALSE(inst.caps.has_value());
  const Instance capped =
      ParseInstance(R"({"kind":"points","points":[[0,0],[3,4]],"caps":[1,null]})");
  EXPECT_EQ(capped.cap(0), 1.0);
  EXPECT_EQ(capped.cap(1), kUnbounded);
}

TEST(ParseInstance, Graph) {
  const Instance inst = ParseInstance(R"({"kind":"graph","n":3,"edges":[[0,1,2],[1,2,3]]})");
  EXPECT_EQ(inst.metric(0, 2), 5.0);
  const Instance implicit_n = ParseInstance(R"({"kind":"graph","edges":[[0,1,1]]})");
  EXPECT_EQ(implicit_n.size(), 2);
}

TEST(ParseInstance, Rejections) {
  ExpectParseError("not json");
  ExpectParseError("[]");
  ExpectParseError(R"({"kind":"circle"})");
  ExpectParseError(R"({"kind":"points"})");
  ExpectParseError(R"({"kind":"points","points":[[0]]})");
  ExpectParseError(R"({"kind":"points","points":[["a",1]]})");
  ExpectParseError(R"({"kind":"points","points":[[NaN,1]]})");
  ExpectParseError(R"({"kind":"points","points":[[1e999,1]]})");
  ExpectParseError(R"({"kind":"points","points":[[0,0]],"edges":[[0,1,1]]})");
  ExpectParseError(R"({"kind":"graph","edges":[[0,1]]})");
  ExpectParseError(R"({"kind":"graph","edges":[[0,1.5,1]]})");
  ExpectParseError(R"({"kind":"points","points":[[0,0]],"caps":["x"]})");
  EXPECT_THROW(ParseInstance(R"({"kind":"points","points":[]})"), Error);
  EXPECT_THROW(ParseInstance(R"({"kind":"graph","n":3,"edges":[[0,1,1]]})"), Error);
  EXPECT_THROW(ParseInstance(R"({"kind":"points","points":[[0,0]],"caps":[1,2]})"), Error);
}

TEST(InstanceJson, RoundTrip) {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.Below(10));
    Instance inst = trial % 2 ? GenUniformDisk(n, 1.0, rng.Below(1u << 30))
                              : GenRandomGraph(std::max(n, 2), 0.3, rng.Below(1u << 30));
    if (trial % 3 == 0) {
      std::vector<double> caps(inst.size());
      for (double& c : caps) c = rng.Uniform() < 0.3 ? kUnbounded : rng.Uniform();
      inst = testing::WithCaps(inst, caps);
    }
    const std::string text = InstanceToJson(inst);
    const Instance back = ParseInstance(text);
    ExpectSameMetric(inst, back);
    EXPECT_EQ(InstanceToJson(back), text);
  }
}

TEST(TreeJson, RoundTripAndErrors) {
  const ConnectivityTree t(4, {{0, 1}, {1, 2}, {1, 3}});
  EXPECT_EQ(TreeToJson(t), "[[0,1],[1,2],[1,3]]");
  EXPECT_EQ(ParseTree(TreeToJson(t), 4), t);
  EXPECT_THROW(ParseTree("[[0,1]]", 3), Error);
  EXPECT_THROW(ParseTree("[[0,1],[0,1]]", 3), Error);
  EXPECT_THROW(ParseTree("{}", 2), Error);
}

TEST(ReportJson, RoundTrip) {
  const Instance inst = testing::Line({0, 1, 2.5});
  SolveReport rep = SolveTree(inst, ConnectivityTree(3, {{0, 1}, {1, 2}}));
  const std::string text = ReportToJson(rep);
  EXPECT_EQ(text.find("\"value\""), 1u);
  EXPECT_EQ(text.find("heuristic"), std::string::npos);
  const SolveReport back = ParseReport(text);
  EXPECT_EQ(back.value, rep.value);
  EXPECT_EQ(back.assignment.radii, rep.assignment.radii);
  EXPECT_EQ(*back.tree, *rep.tree);
  EXPECT_EQ(back.method, "tree");
  EXPECT_EQ(back.lower_bound, rep.lower_bound);
  EXPECT_EQ(ParseRadii(text).radii, rep.assignment.radii);
  EXPECT_EQ(ParseRadii("[0, 1.5, 0]").radii, (std::vector<double>{0, 1.5, 0}));

  rep.heuristic = true;
  rep.tree.reset();
  const std::string h = ReportToJson(rep);
  EXPECT_NE(h.find("\"heuristic\":true"), std::string::npos);
  EXPECT_NE(h.find("\"tree\":null"), std::string::npos);
  EXPECT_TRUE(ParseReport(h).heuristic);
}

TEST(ReportJson, DoublesRoundTripExactly) {
  SolveReport rep;
  rep.assignment.radii = {0.1, 1.0 / 3.0, std::sqrt(2.0), 1e-300};
  rep.value = rep.assignment.Cost();
  const SolveReport back = ParseReport(ReportToJson(rep));
  EXPECT_EQ(back.assignment.radii, rep.assignment.radii);
  EXPECT_EQ(back.value, rep.value);
}

TEST(ValidationJson, Fields) {
  const Instance inst = testing::WithCaps(testing::Line({0, 1}), {0.5, 0.5});
  const std::string text = ValidationToJson(Validate(inst, {{1, 0}}));
  EXPECT_NE(text.find("\"connected\":true"), std::string::npos);
  EXPECT_NE(text.find("radius exceeds cap"), std::string::npos);
}

TEST(RenderSvg, DrawsCircles) {
  const Instance inst = testing::Line({0, 1, 2});
  const SolveReport rep = SolveTree(inst, ConnectivityTree(3, {{0, 1}, {1, 2}}));
  const std::string svg = RenderSvg(inst, rep, 300);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  EXPECT_THROW(RenderSvg(GenRandomGraph(3, 0.5, 1), rep), Error);
}

}  // namespace
}  // namespace cra
