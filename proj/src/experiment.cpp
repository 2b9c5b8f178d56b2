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

#include "smoothmax/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

#include "smoothmax/error.hpp"
#include "smoothmax/io.hpp"

namespace smoothmax {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double AbsError(const RealVector& v, Method method, double t) {
  const double value = method == Method::kL ? LogSumExpMax(v, t).value : RatioMax(v, t).value;
  return std::abs(value - v.max());
}

// Runs fn(cell) for cell = 0..count-1 on a pool; results are stored by index,
// so scheduling never affects the output order.
template <typename Result, typename Fn>
std::vector<Result> ParallelCells(std::size_t count, unsigned threads, Fn fn) {
  std::vector<Result> out(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < count && !failed; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

struct Cell {
  std::size_t n = 0, mu = 0;
};

std::vector<Cell> TriangleCells(int n_max) {
  std::vector<Cell> cells;
  for (int n = 1; n <= n_max; ++n) {
    for (int mu = 1; mu <= n; ++mu) cells.push_back({std::size_t(n), std::size_t(mu)});
  }
  return cells;
}

// Per-rep differences t*_L - t*_R with their means.
struct HeatCell {
  std::vector<double> diffs;
  double mean_L = 0.0, mean_R = 0.0;
  int censored = 0;
};

// Searches that exhaust the budget are recorded at the budget and counted.
double CensoredTStar(const RealVector& v, Method method, double delta, int& censored) {
  try {
    return FindTStar(v, method, delta);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNumerical) throw;
    ++censored;
    return kTStarLimit;
  }
}

std::string IntegerHeatmap(const ExperimentConfig& cfg) {
  Require(cfg.M >= 2, "integer heatmap needs M >= 2");
  const auto cells = TriangleCells(cfg.n_max);
  auto results = ParallelCells<HeatCell>(cells.size(), cfg.threads, [&](std::size_t c) {
    const auto [n, mu] = cells[c];
    HeatCell h;
    for (int rep = 0; rep < cfg.reps; ++rep) {
      auto g = CellStream(cfg.seed, n, mu, std::uint64_t(rep));
      std::vector<double> v(mu, double(cfg.M));
      for (std::size_t i = mu; i < n; ++i) v.push_back(double(UniformInt(g, 1, cfg.M - 1)));
      const RealVector rv(std::move(v));
      const double tl = CensoredTStar(rv, Method::kL, 1.0, h.censored);
      const double tr = CensoredTStar(rv, Method::kR, 1.0, h.censored);
      h.diffs.push_back(tl - tr);
      h.mean_L += tl / cfg.reps;
      h.mean_R += tr / cfg.reps;
    }
    return h;
  });
  std::ostringstream out;
  out << "n,mu,statistic,mean_tstar_L,mean_tstar_R,censored\n";
  for (std::size_t c = 0; c < cells.size(); ++c) {
    double stat = 0.0;
    for (double d : results[c].diffs) stat += SymmetricLogGap(d);
    stat /= cfg.reps;
    out << cells[c].n << ',' << cells[c].mu << ',' << FormatNumber(stat) << ','
        << FormatNumber(results[c].mean_L) << ',' << FormatNumber(results[c].mean_R) << ','
        << results[c].censored << '\n';
  }
  return out.str();
}

std::string UniformHeatmap(const ExperimentConfig& cfg) {
  const auto cells = TriangleCells(cfg.n_max);
  auto results = ParallelCells<HeatCell>(cells.size(), cfg.threads, [&](std::size_t c) {
    const auto [n, mu] = cells[c];
    HeatCell h;
    const double delta = DeltaFor(cfg.delta_rule, n);
    const double shrink = double(n - 1) / double(n);
    for (int rep = 0; rep < cfg.reps; ++rep) {
      auto g = CellStream(cfg.seed, n, mu, std::uint64_t(rep));
      std::vector<double> v(mu, 1.0);
      for (std::size_t i = mu; i < n; ++i) v.push_back(UniformUnit(g) * shrink);
      const RealVector rv(std::move(v));
      const double tl = CensoredTStar(rv, Method::kL, delta, h.censored);
      const double tr = CensoredTStar(rv, Method::kR, delta, h.censored);
      h.diffs.push_back(tl - tr);
      h.mean_L += tl / cfg.reps;
      h.mean_R += tr / cfg.reps;
    }
    return h;
  });
  // Offset so the smallest difference maps to log(1) = 0 when some
  // differences are negative; all logs stay defined.
  double min_diff = INFINITY;
  for (const auto& h : results) {
    for (double d : h.diffs) min_diff = std::min(min_diff, d);
  }
  const double alpha = 1.0 + std::max(0.0, -min_diff);
  std::ostringstream out;
  out << "n,mu,statistic,mean_tstar_L,mean_tstar_R,alpha,censored\n";
  for (std::size_t c = 0; c < cells.size(); ++c) {
    double stat = 0.0;
    for (double d : results[c].diffs) stat += std::log(alpha + d) - std::log(alpha);
    stat /= cfg.reps;
    out << cells[c].n << ',' << cells[c].mu << ',' << FormatNumber(stat) << ','
        << FormatNumber(results[c].mean_L) << ',' << FormatNumber(results[c].mean_R) << ','
        << FormatNumber(alpha) << ',' << results[c].censored << '\n';
  }
  return out.str();
}

struct ClusterCell {
  double mean_error = 0.0;
  int successes = 0;
};

std::string Cluster(const ExperimentConfig& cfg) {
  Require(cfg.g_steps >= 1 && cfg.eps_steps >= 1, "cluster grid needs at least one step");
  Require(cfg.clusters >= 2 && cfg.cluster_size >= 1, "cluster shape is invalid");
  const std::size_t width = std::size_t(cfg.eps_steps) + 1;
  const std::size_t count = std::size_t(cfg.g_steps) * width;
  auto results = ParallelCells<ClusterCell>(count, cfg.threads, [&](std::size_t c) {
    const int gi = int(c / width) + 1;
    const int ei = int(c % width);
    const double gap = double(gi) / cfg.g_steps;
    const double eps = double(ei) / cfg.eps_steps;
    // u = log t* with t* = (4g / eps)^(1/g); eps = 0 sends t* to infinity.
    const double u = eps == 0.0 ? INFINITY : std::log(4.0 * gap / eps) / gap;
    ClusterCell out;
    for (int rep = 0; rep < cfg.reps; ++rep) {
      auto g = CellStream(cfg.seed, std::uint64_t(gi), std::uint64_t(ei), std::uint64_t(rep));
      std::vector<double> truth{1.0, 1.0 - gap};
      for (int k = 2; k < cfg.clusters; ++k) truth.push_back(UniformUnit(g) * (1.0 - gap));
      std::vector<double> v;
      for (double w : truth) {
        for (int s = 0; s < cfg.cluster_size; ++s) v.push_back(w - eps + 2.0 * eps * UniformUnit(g));
      }
      const RealVector rv(std::move(v));
      const double r = std::isinf(u) ? rv.max() : RatioAtLogScale(rv, u);
      const double err = std::abs(1.0 - r);
      out.mean_error += err / cfg.reps;
      out.successes += err < eps ? 1 : 0;
    }
    return out;
  });
  std::ostringstream out;
  out << "g,eps,mean_error,successes,reps\n";
  for (std::size_t c = 0; c < count; ++c) {
    const double gap = double(c / width + 1) / cfg.g_steps;
    const double eps = double(c % width) / cfg.eps_steps;
    out << FormatNumber(gap) << ',' << FormatNumber(eps) << ','
        << FormatNumber(results[c].mean_error) << ',' << results[c].successes << ',' << cfg.reps
        << '\n';
  }
  return out.str();
}

}  // namespace

const char* ExperimentKindName(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::kIntegerHeatmap: return "integer";
    case ExperimentKind::kUniformHeatmap: return "uniform";
    case ExperimentKind::kCluster: return "cluster";
  }
  return "?";
}

const char* DeltaRuleName(DeltaRule r) {
  switch (r) {
    case DeltaRule::kOne: return "one";
    case DeltaRule::kExp1: return "exp1";
    case DeltaRule::kInvN: return "inv-n";
    case DeltaRule::kOneHundredth: return "hundredth";
  }
  return "?";
}

double DeltaFor(DeltaRule rule, std::size_t n) {
  switch (rule) {
    case DeltaRule::kOne: return 1.0;
    case DeltaRule::kExp1: return std::exp(1.0);
    case DeltaRule::kInvN: return 1.0 / static_cast<double>(n);
    case DeltaRule::kOneHundredth: return 0.01;
  }
  return 1.0;
}

std::mt19937_64 CellStream(std::uint64_t seed, std::uint64_t i, std::uint64_t j,
                           std::uint64_t rep) {
  std::uint64_t s = SplitMix64(seed);
  for (std::uint64_t part : {i, j, rep}) s = SplitMix64(s ^ SplitMix64(part));
  return std::mt19937_64(s);
}

double UniformUnit(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1p-53;
}

std::int64_t UniformInt(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  Require(lo <= hi, "empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased and independent of the platform.
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t x = g();
  while (limit != 0 && x >= limit) x = g();
  return lo + static_cast<std::int64_t>(span == 0 ? x : x % span);
}

double FindTStar(const RealVector& v, Method method, double delta) {
  Require(delta > 0.0, "delta must be positive");
  Require(method == Method::kL || method == Method::kR, "t* search supports L and R");
  // |L - M| shrinks and |R - M| shrinks monotonically as t grows.
  auto ok = [&](double t) { return AbsError(v, method, t) < delta; };
  double hi = kTStarStart;
  if (ok(hi)) return hi;
  double lo = hi;
  while (!ok(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > kTStarLimit) Fail(ErrorKind::kNumerical, "t* search exceeded its budget");
  }
  while (hi / lo - 1.0 > kTStarRelTol) {
    const double mid = std::sqrt(lo * hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

double SymmetricLogGap(double d) { return std::copysign(std::log1p(std::abs(d)), d); }

double RatioAtLogScale(const RealVector& v, double u) {
  Require(std::isfinite(u), "u must be finite");
  const double ref = u >= 0.0 ? v.max() : v.min();
  double total = 0.0, offset = 0.0;
  for (double x : v.entries()) {
    const double w = std::exp((x - ref) * u);
    total += w;
    offset += w * (x - ref);
  }
  return ref + offset / total;
}

std::string RunExperiment(const ExperimentConfig& cfg) {
  Require(cfg.reps >= 1, "reps must be >= 1");
  Require(cfg.n_max >= 1, "n_max must be >= 1");
  switch (cfg.kind) {
    case ExperimentKind::kIntegerHeatmap: return IntegerHeatmap(cfg);
    case ExperimentKind::kUniformHeatmap: return UniformHeatmap(cfg);
    case ExperimentKind::kCluster: return Cluster(cfg);
  }
  return {};
}

}  // namespace smoothmax
