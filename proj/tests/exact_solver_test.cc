#include "cra/exact_solver.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "cra/error.h"
#include "cra/instance_gen.h"
#include "test_util.h"

namespace cra {
namespace {

using testing::Line;
using testing::RandomPlanar;
using testing::UnitSquare;
using testing::WithCaps;

TEST(Enumeration, CayleyCounts) {
  EXPECT_EQ(CountSpanningTrees(2), 1);
  EXPECT_EQ(CountSpanningTrees(3), 3);
  EXPECT_EQ(CountSpanningTrees(4), 16);
  EXPECT_EQ(CountSpanningTrees(7), 16807);
  EXPECT_EQ(CountSpanningTrees(9), 4782969);
}

TEST(Enumeration, VisitsEachTreeOnce) {
  for (int n = 2; n <= 7; ++n) {
    std::set<std::vector<Edge>> seen;
    const std::int64_t count = EnumerateSpanningTrees(n, [&](const ConnectivityTree& t) {
      EXPECT_TRUE(IsSpanningTree(n, t.edges()));
      seen.insert(t.edges());
    });
    EXPECT_EQ(count, CountSpanningTrees(n));
    EXPECT_EQ(static_cast<std::int64_t>(seen.size()), count);
  }
}

TEST(Enumeration, MatchesSubsetEnumeration) {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::vector<Edge>> prufer, subsets;
    EnumerateSpanningTrees(n, [&](const ConnectivityTree& t) { prufer.insert(t.edges()); });
    testing::ForEachSpanningTreeBySubsets(
        n, [&](const ConnectivityTree& t) { subsets.insert(t.edges()); });
    EXPECT_EQ(prufer, subsets);
  }
}

TEST(Enumeration, Limits) {
  try {
    EnumerateSpanningTrees(9, [](const ConnectivityTree&) {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
    EXPECT_NE(std::string(e.what()).find("enumeration too large"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("4782969"), std::string::npos);
  }
  EXPECT_THROW(EnumerateSpanningTrees(1, [](const ConnectivityTree&) {}), Error);
}

TEST(PruferDecode, KnownSequence) {
  // Sequence (3, 3, 3) on 5 vertices is the star at 3.
  const std::vector<int> seq{3, 3, 3};
  std::vector<Edge> edges = PruferDecode(seq, 5);
  ConnectivityTree t(5, edges);
  EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}, {3, 4}}));
}

TEST(ExactSolve, SpotValues) {
  EXPECT_NEAR(ExactSolve(Line({0, 1, 2})).value, 1.0, 1e-12);
  const SolveReport sq = ExactSolve(UnitSquare());
  EXPECT_NEAR(sq.value, std::sqrt(2.0), 1e-9);
  EXPECT_EQ(sq.method, "exact");
  ASSERT_TRUE(sq.tree.has_value());
  EXPECT_TRUE(Validate(UnitSquare(), sq.assignment).ok());
  for (int k = 1; k <= 3; ++k) {
    const LowerBoundFamily fam = GenKCircleLowerBoundFamily(k);
    EXPECT_EQ(ExactSolve(fam.inst).value, std::pow(2.0, k + 1) - 1);
  }
}

TEST(ExactSolve, SingleAndPair) {
  const SolveReport one = ExactSolve(Line({4}));
  EXPECT_EQ(one.value, 0.0);
  EXPECT_EQ(one.assignment.radii, std::vector<double>{0.0});
  EXPECT_EQ(ExactSolve(Line({0, 2.5})).value, 2.5);
}

TEST(ExactSolve, TooLarge) {
  EXPECT_THROW(ExactSolve(Line({0, 1, 2, 3, 4, 5, 6, 7, 8})), Error);
}

TEST(ExactSolve, MatchesSubsetBruteForce) {
  Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.Below(4));
    Instance inst = trial % 3 ? RandomPlanar(rng, n)
                              : GenRandomGraph(n, 0.3, rng.Below(1u << 30));
    if (trial % 4 == 0) {
      std::vector<double> caps(n);
      for (double& c : caps) c = rng.Uniform(0.3, 1.5) * inst.metric.diameter();
      inst = WithCaps(inst, caps);
    }
    const double want = testing::BruteForceOptimum(inst);
    if (std::isinf(want)) {
      EXPECT_THROW(ExactSolve(inst), Error);
      continue;
    }
    const SolveReport rep = ExactSolve(inst);
    EXPECT_NEAR(rep.value, want, 1e-9 * inst.metric.diameter());
    EXPECT_TRUE(Validate(inst, rep.assignment).ok());
    EXPECT_GE(rep.value, DiameterLowerBound(inst) - inst.metric.tolerance());
    EXPECT_LE(rep.lower_bound, rep.value + inst.metric.tolerance());
  }
}

TEST(ExactSolve, NotAboveSampledTrees) {
  Rng rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.Below(6));
    const Instance inst = RandomPlanar(rng, n);
    const double opt = ExactSolve(inst).value;
    for (int s = 0; s < 5; ++s) {
      EXPECT_LE(opt, SolveTree(inst, testing::RandomTree(rng, n)).value + inst.metric.tolerance());
    }
  }
}

TEST(ExactSolve, PermutationInvariant) {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.Below(6));
    std::vector<Point> pts(n);
    for (Point& p : pts) p = {rng.Uniform(-1, 1), rng.Uniform(-1, 1)};
    std::vector<Point> shuffled = pts;
    for (int i = n - 1; i > 0; --i) std::swap(shuffled[i], shuffled[rng.Below(i + 1)]);
    const double a = ExactSolve(MakeInstance(BuildEuclidean(pts))).value;
    const double b = ExactSolve(MakeInstance(BuildEuclidean(shuffled))).value;
    EXPECT_NEAR(a, b, 1e-9 * 3);
  }
}

TEST(ExactSolve, JobsAndPruningDoNotChangeResult) {
  Rng rng(54);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng.Below(5));
    const Instance inst = RandomPlanar(rng, n);
    const SolveReport base = ExactSolve(inst, {kDefaultEnumerationCap, 1, false});
    for (int jobs : {1, 3}) {
      const SolveReport rep = ExactSolve(inst, {kDefaultEnumerationCap, jobs, true});
      EXPECT_EQ(rep.value, base.value);
      EXPECT_EQ(rep.assignment.radii, base.assignment.radii);
      EXPECT_EQ(*rep.tree, *base.tree);
    }
  }
}

TEST(ExactSolve, TieGoesToSmallestTree) {
  // Every tree on three coincident points costs 0.
  const std::vector<Point> pts{{0, 0}, {0, 0}, {0, 0}};
  const SolveReport rep = ExactSolve(MakeInstance(BuildEuclidean(pts)));
  EXPECT_EQ(rep.value, 0.0);
  EXPECT_EQ(rep.tree->edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(ExactSolve, AllTreesInfeasible) {
  const Instance inst = WithCaps(Line({0, 1, 2}), {0.1, 0.1, 0.1});
  try {
    ExactSolve(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

TEST(ExactSolve, CapsRespected) {
  // The middle point is pinned to zero, so both ends pay 1.
  const Instance inst = WithCaps(Line({0, 1, 2}), {kUnbounded, 0, kUnbounded});
  const SolveReport rep = ExactSolve(inst);
  EXPECT_NEAR(rep.value, 2.0, 1e-12);
  EXPECT_EQ(rep.assignment.radii[1], 0.0);
}

TEST(TreeValueStatistics, Examples) {
  const TreeValueStats two = TreeValueStatistics(Line({0, 3}));
  EXPECT_EQ(two.opt, 3.0);
  EXPECT_EQ(two.mean_tree_value, 3.0);
  EXPECT_EQ(two.tree_count, 1);

  const TreeValueStats line = TreeValueStatistics(Line({0, 1, 2}));
  EXPECT_NEAR(line.opt, 1.0, 1e-12);
  // Trees: path through 1 costs 1; star at 0 needs r0 >= 2 and costs 2; star
  // at 2 costs 2 with r2 = 2 covering both constraints.
  EXPECT_NEAR(line.mean_tree_value, (1.0 + 2.0 + 2.0) / 3.0, 1e-12);
  EXPECT_EQ(line.tree_count, 3);
  EXPECT_EQ(line.feasible_count, 3);

  const TreeValueStats sq = TreeValueStatistics(UnitSquare());
  EXPECT_NEAR(sq.opt, std::sqrt(2.0), 1e-9);
  EXPECT_GE(sq.mean_tree_value, sq.opt);
  EXPECT_EQ(sq.tree_count, 16);
}

TEST(TreeValueStatistics, MeanMatchesSubsetEnumeration) {
  Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng.Below(4));
    const Instance inst = RandomPlanar(rng, n);
    double sum = 0;
    int count = 0;
    testing::ForEachSpanningTreeBySubsets(n, [&](const ConnectivityTree& t) {
      sum += testing::LpVertexOracle(inst, t);
      ++count;
    });
    const TreeValueStats s = TreeValueStatistics(inst);
    EXPECT_EQ(s.tree_count, count);
    EXPECT_NEAR(s.mean_tree_value, sum / count, 1e-9);
    EXPECT_NEAR(s.opt, ExactSolve(inst).value, 1e-12);
  }
}

}  // namespace
}  // namespace cra
