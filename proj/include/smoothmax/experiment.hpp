// Copyright 2026 The smoothmax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SMOOTHMAX_EXPERIMENT_HPP_
#define SMOOTHMAX_EXPERIMENT_HPP_

// Seeded comparisons of the smooth maximum approximations.

#include <cstdint>
#include <random>
#include <string>

#include "smoothmax/approx.hpp"
#include "smoothmax/vector.hpp"

namespace smoothmax {

enum class ExperimentKind { kIntegerHeatmap, kUniformHeatmap, kCluster };
enum class DeltaRule { kOne, kExp1, kInvN, kOneHundredth };

const char* ExperimentKindName(ExperimentKind k);
const char* DeltaRuleName(DeltaRule r);
double DeltaFor(DeltaRule rule, std::size_t n);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kIntegerHeatmap;
  int M = 50;                         // integer heatmap maximum
  int n_max = 50;
  int reps = 10;
  DeltaRule delta_rule = DeltaRule::kOne;  // uniform heatmap tolerance
  int g_steps = 20;    // cluster gaps g = k / g_steps, k = 1..g_steps
  int eps_steps = 20;  // cluster noise eps = j / eps_steps, j = 0..eps_steps
  int clusters = 5;
  int cluster_size = 20;
  std::uint64_t seed = 42;
  unsigned threads = 1;  // 0 = hardware concurrency; never changes the output
};

// Per-cell generator: SplitMix64 folds (seed, i, j, rep) into the state of
// an mt19937_64, so every cell has its own stream on every platform.
std::mt19937_64 CellStream(std::uint64_t seed, std::uint64_t i, std::uint64_t j,
                           std::uint64_t rep);
double UniformUnit(std::mt19937_64& g);                                // [0, 1)
std::int64_t UniformInt(std::mt19937_64& g, std::int64_t lo, std::int64_t hi);  // [lo, hi]

inline constexpr double kTStarStart = 1.001;
inline constexpr double kTStarLimit = 1e9;
inline constexpr double kTStarRelTol = 1e-3;

// Smallest t on the schedule (doubling from 1.001, then bisection to 1e-3
// relative) with |approx(t) - max v| < delta. method is kL or kR.
double FindTStar(const RealVector& v, Method method, double delta);

struct TStarRecord {
  std::size_t n = 0;
  std::size_t mu = 0;
  double t_star_L = 0.0;
  double t_star_R = 0.0;
  double statistic = 0.0;
};

// sign(d) log(1 + |d|) for d = t*_L - t*_R; equals log(1 + d) when d >= 0.
double SymmetricLogGap(double d);

// R_v at t = e^u for any real u.
double RatioAtLogScale(const RealVector& v, double u);

// CSV with a header row; byte-identical for a fixed config.
std::string RunExperiment(const ExperimentConfig& cfg);

}  // namespace smoothmax

#endif  // SMOOTHMAX_EXPERIMENT_HPP_
