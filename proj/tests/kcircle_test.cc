#include "cra/kcircle.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "cra/error.h"
#include "cra/exact_solver.h"
#include "cra/instance_gen.h"
#include "test_util.h"

namespace cra {
namespace {

using testing::Line;
using testing::RandomPlanar;
using testing::UnitSquare;
using testing::WithCaps;

double MinEccentricity(const Instance& inst) {
  double best = kUnbounded;
  for (int i = 0; i < inst.size(); ++i) {
    double ecc = 0;
    for (int j = 0; j < inst.size(); ++j) ecc = std::max(ecc, inst.metric(i, j));
    if (ecc <= inst.cap(i)) best = std::min(best, ecc);
  }
  return best;
}

// Two-circle optimum by trying, for every pair, each radius a tight
// constraint could pin it to, and keeping the validated minima.
double TwoCircleBruteForce(const Instance& inst) {
  const int n = inst.size();
  if (n == 1) return 0.0;
  const double tol = inst.metric.tolerance();
  double best = kUnbounded;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double dab = inst.metric(a, b);
      std::vector<double> ra_options{0.0, dab, inst.cap(a)};
      for (int j = 0; j < n; ++j) {
        ra_options.push_back(inst.metric(a, j));
        ra_options.push_back(dab - inst.metric(b, j));
        ra_options.push_back(dab - inst.cap(b));
      }
      for (double ra : ra_options) {
        if (!(ra >= 0) || !std::isfinite(ra)) continue;
        std::vector<double> rb_options{0.0, dab - ra, inst.cap(b)};
        for (int j = 0; j < n; ++j) rb_options.push_back(inst.metric(b, j));
        for (double rb : rb_options) {
          if (!(rb >= 0) || !std::isfinite(rb)) continue;
          std::vector<double> r(n, 0.0);
          r[a] = ra;
          r[b] = rb;
          if (ra + rb >= best - tol) continue;
          if (Validate(inst, {r}).ok()) best = ra + rb;
        }
      }
    }
  }
  return std::min(best, MinEccentricity(inst));
}

void ExpectKCircle(const Instance& inst, const SolveReport& rep, int k) {
  EXPECT_LE(rep.assignment.PositiveCount(), k);
  EXPECT_TRUE(Validate(inst, rep.assignment).ok());
  EXPECT_NEAR(rep.value, rep.assignment.Cost(), inst.metric.tolerance());
  EXPECT_LE(rep.lower_bound, rep.value + inst.metric.tolerance());
  EXPECT_TRUE(rep.tree.has_value());
}

Instance IntegerLine(Rng& rng, int n, int span) {
  std::vector<double> xs(n);
  for (double& x : xs) x = static_cast<double>(rng.Below(span + 1));
  return Line(xs);
}

Instance IntegerGraph(Rng& rng, int n) {
  WeightedGraph g{n, {}};
  for (int i = 1; i < n; ++i) {
    g.edges.push_back({i, static_cast<int>(rng.Below(i)), 1.0 + rng.Below(4)});
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.Uniform() < 0.3) g.edges.push_back({u, v, 1.0 + rng.Below(4)});
    }
  }
  return MakeInstance(BuildGraphMetric(g));
}

TEST(BestOneCircle, Examples) {
  const SolveReport a = BestOneCircle(Line({0, 1, 2}));
  EXPECT_EQ(a.value, 1.0);
  EXPECT_EQ(a.assignment.radii, (std::vector<double>{0, 1, 0}));
  EXPECT_EQ(a.method, "best1");

  const SolveReport b = BestOneCircle(Line({0, 1, 2, 3}));
  EXPECT_EQ(b.value, 2.0);
  EXPECT_EQ(b.assignment.radii[1], 2.0);

  const SolveReport c = BestOneCircle(UnitSquare());
  EXPECT_DOUBLE_EQ(c.value, std::sqrt(2.0));
  EXPECT_EQ(c.assignment.radii[0], c.value);
  ExpectKCircle(UnitSquare(), c, 1);
}

TEST(BestOneCircle, Caps) {
  const Instance inst = WithCaps(Line({0, 1, 2}), {kUnbounded, 0.5, kUnbounded});
  const SolveReport rep = BestOneCircle(inst);
  EXPECT_EQ(rep.value, 2.0);
  EXPECT_EQ(rep.assignment.radii[0], 2.0);
  EXPECT_THROW(BestOneCircle(WithCaps(Line({0, 1, 2}), {1, 0.5, 1})), Error);
}

TEST(BestOneCircle, MatchesEccentricity) {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = RandomPlanar(rng, 1 + static_cast<int>(rng.Below(12)));
    EXPECT_EQ(BestOneCircle(inst).value, MinEccentricity(inst));
  }
}

TEST(BestTwoCircle, Examples) {
  const SolveReport a = BestTwoCircle(Line({0, 1, 2, 3}));
  EXPECT_NEAR(a.value, 2.0, 1e-12);
  EXPECT_NEAR(TwoCircleBruteForce(Line({0, 1, 2, 3})), 2.0, 1e-12);
  ExpectKCircle(Line({0, 1, 2, 3}), a, 2);
  EXPECT_EQ(a.method, "best2");

  EXPECT_EQ(BestTwoCircle(Line({0, 5})).value, 5.0);
  EXPECT_EQ(BestTwoCircle(Line({0, 1, 2})).value, 1.0);
  EXPECT_EQ(BestTwoCircle(Line({7})).value, 0.0);
}

TEST(BestTwoCircle, MatchesBruteForce) {
  Rng rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.Below(9));
    Instance inst = trial % 3 == 0 ? GenRandomGraph(n, 0.3, rng.Below(1u << 30))
                                   : RandomPlanar(rng, n);
    if (trial % 4 == 1) {
      std::vector<double> caps(n);
      for (double& c : caps) c = rng.Uniform(0, inst.metric.diameter() * 1.2);
      inst = WithCaps(inst, caps);
    }
    const double want = TwoCircleBruteForce(inst);
    if (std::isinf(want)) {
      EXPECT_THROW(BestTwoCircle(inst), Error);
      continue;
    }
    const SolveReport rep = BestTwoCircle(inst);
    EXPECT_NEAR(rep.value, want, 1e-9 * std::max(1.0, inst.metric.diameter()));
    ExpectKCircle(inst, rep, 2);
  }
}

TEST(BestKCircle, Consistency) {
  Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.Below(7));
    const Instance inst = trial % 2 ? RandomPlanar(rng, n)
                                    : GenRandomGraph(n, 0.4, rng.Below(1u << 30));
    const double tol = inst.metric.tolerance();
    const SolveReport k1 = BestKCircle(inst, 1);
    EXPECT_NEAR(k1.value, BestOneCircle(inst).value, tol);
    ExpectKCircle(inst, k1, 1);
    if (n >= 2) {
      const SolveReport k2 = BestKCircle(inst, 2);
      EXPECT_NEAR(k2.value, BestTwoCircle(inst).value, tol);
      ExpectKCircle(inst, k2, 2);
    }
    double previous = k1.value;
    for (int k = 2; k <= n; ++k) {
      const SolveReport rep = BestKCircle(inst, k);
      EXPECT_FALSE(rep.heuristic);
      EXPECT_EQ(rep.method, "bestk");
      ExpectKCircle(inst, rep, k);
      EXPECT_LE(rep.value, previous + tol);
      previous = rep.value;
    }
    EXPECT_NEAR(previous, ExactSolve(inst).value, tol);
  }
}

TEST(BestKCircle, MatchesIntegerBruteForce) {
  Rng rng(64);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.Below(5));
    const Instance inst = trial % 2 ? IntegerLine(rng, n, 12) : IntegerGraph(rng, n);
    const int reach = static_cast<int>(inst.metric.diameter());
    for (int k = 1; k <= std::min(n, 3); ++k) {
      const double want = testing::IntegerKCircleBruteForce(inst, k, reach);
      EXPECT_NEAR(BestKCircle(inst, k).value, want, 1e-9) << "k=" << k;
    }
  }
}

TEST(BestKCircle, LowerBoundFamilyDeficit) {
  for (int k = 1; k <= 3; ++k) {
    const LowerBoundFamily fam = GenKCircleLowerBoundFamily(k);
    const SolveReport rep = BestKCircle(fam.inst, k);
    const double opt = std::pow(2.0, k + 1) - 1;
    EXPECT_EQ(rep.value, opt + 1);
    EXPECT_EQ(testing::IntegerKCircleBruteForce(fam.inst, k,
                                                static_cast<int>(fam.inst.metric.diameter())),
              opt + 1);
    EXPECT_GE(rep.value / opt, 1 + 1 / (std::pow(2.0, k + 1) - 1) - 1e-9);
    // One more circle closes the gap.
    EXPECT_EQ(BestKCircle(fam.inst, k + 1).value, opt);
  }
}

TEST(BestKCircle, BudgetFallback) {
  Rng rng(65);
  const Instance inst = RandomPlanar(rng, 8);
  KCircleOptions opts;
  opts.max_evaluations = 3;
  const SolveReport rep = BestKCircle(inst, 4, opts);
  EXPECT_TRUE(rep.heuristic);
  ExpectKCircle(inst, rep, 4);
  EXPECT_GE(rep.value, BestKCircle(inst, 4).value - inst.metric.tolerance());
}

TEST(BestKCircle, Caps) {
  // Only the two ends may grow.
  const Instance inst = WithCaps(Line({0, 1, 2, 3}), {kUnbounded, 0, 0, kUnbounded});
  const SolveReport rep = BestKCircle(inst, 2);
  ExpectKCircle(inst, rep, 2);
  EXPECT_NEAR(rep.value, 3.0, 1e-12);
  EXPECT_NEAR(rep.value, ExactSolve(inst).value, 1e-12);
}

TEST(BestKCircle, BadK) {
  EXPECT_THROW(BestKCircle(Line({0, 1}), 0), Error);
  EXPECT_THROW(BestKCircle(Line({0, 1}), 3), Error);
}

TEST(Ratios, HoldOnRandomInstances) {
  Rng rng(66);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.Below(5));
    Instance inst = trial % 3 == 0   ? GenRandomGraph(n, 0.3, rng.Below(1u << 30))
                    : trial % 3 == 1 ? GenCollinear(n, 1.0, rng.Below(1u << 30))
                                     : GenUniformDisk(n, 1.0, rng.Below(1u << 30));
    const double opt = ExactSolve(inst).value;
    const double tol = inst.metric.tolerance();
    const SolveReport one = BestOneCircle(inst);
    const SolveReport two = BestTwoCircle(inst);
    EXPECT_LE(one.value, 1.5 * opt + tol);
    EXPECT_LE(two.value, 4.0 / 3.0 * opt + tol);
    if (inst.metric.collinear()) EXPECT_LE(two.value, 1.25 * opt + tol);
    EXPECT_LE(one.lower_bound, opt + tol);
    EXPECT_LE(two.lower_bound, opt + tol);
  }
}

}  // namespace
}  // namespace cra
