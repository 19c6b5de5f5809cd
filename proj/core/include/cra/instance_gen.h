#ifndef CRA_INSTANCE_GEN_H_
#define CRA_INSTANCE_GEN_H_

#include <cstdint>
#include <random>

#include "cra/metric.h"

namespace cra {

// All generators draw from std::mt19937_64 seeded with the 64-bit seed
// (the engine's output sequence is fixed by the C++ standard). A uniform
// double in [0, 1) is (next() >> 11) * 2^-53, so instances reproduce
// bit-exactly on any conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Integer in [0, bound).
  std::uint64_t Below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(Uniform() * static_cast<double>(bound));
  }
  // Standard normal by Box-Muller; uses two Uniform() draws.
  double Normal();

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer over (seed, a, b); used to derive per-trial seeds so
// parallel runs stay order-independent.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b = 0);

// Rejection sampling from the bounding square [-radius, radius]^2.
Instance GenUniformDisk(int n, double radius, std::uint64_t seed);

// x uniform in [0, length], y = 0.
Instance GenCollinear(int n, double length, std::uint64_t seed);

// Random connected weighted graph: a random spanning tree plus each other
// pair independently with probability extra_edge_prob; weights uniform in
// [0.1, 1].
Instance GenRandomGraph(int n, double extra_edge_prob, std::uint64_t seed);

struct LowerBoundFamily {
  Instance inst;
  double expected_opt = 0.0;
  double expected_ratio_bound = 0.0;
};

// Collinear points 0, 3*2^i - 2 (i = 0..k) and 2^(k+2) - 2. Tangent circles
// of radii 2^i at the middle points reach from 0 to 2^(k+2) - 2 exactly, so
// the optimum is half the span, 2^(k+1) - 1, and needs k+1 circles; with
// integer distances any k-circle solution pays at least one more.
LowerBoundFamily GenKCircleLowerBoundFamily(int k);

struct WorstRatio {
  Instance inst;
  double ratio = 1.0;
  std::int64_t evaluations = 0;
};

// Randomized restarts plus coordinate perturbation, maximizing
// best-k-circle / optimum over n-point instances (unit disk, or [0, 1] when
// collinear). Deterministic for a given seed.
WorstRatio SearchWorstRatio(int k, int n, bool collinear, std::int64_t budget,
                            std::uint64_t seed);

// Upper bound the approximation guarantees give for that search setting.
// For k >= 3 the two-circle bound applies, since best-k <= best-2.
double GuaranteedRatioBound(int k, bool collinear);

}  // namespace cra

#endif  // CRA_INSTANCE_GEN_H_
