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

#include "smoothmax/applications.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "smoothmax/error.hpp"

namespace smoothmax {
namespace {

constexpr double kSpacingTolerance = 1e-9;

void CheckSameGrid(const CurveGrid& a, const CurveGrid& b) {
  if (a.size() != b.size()) Fail(ErrorKind::kInvalidArgument, "curve grids differ in length");
  const double scale = std::max(1.0, std::abs(a.times.back()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.times[i] - b.times[i]) > kSpacingTolerance * scale) {
      Fail(ErrorKind::kInvalidArgument, "curve grids differ in sample times");
    }
  }
}

}  // namespace

CurveGrid MakeCurveGrid(std::vector<double> times, std::vector<double> values) {
  Require(times.size() == values.size(), "curve times and values differ in length");
  Require(times.size() >= 2, "a curve grid needs at least two samples");
  for (std::size_t i = 0; i < times.size(); ++i) {
    Require(std::isfinite(times[i]) && std::isfinite(values[i]), "curve samples must be finite");
  }
  Require(times.front() == 0.0, "curve grids start at T = 0");
  const double step = times[1] - times[0];
  Require(step > 0.0, "curve times must increase");
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double expected = step * static_cast<double>(i);
    if (std::abs(times[i] - expected) > kSpacingTolerance * std::max(1.0, std::abs(expected))) {
      Fail(ErrorKind::kInvalidArgument, "curve times must be uniformly spaced");
    }
  }
  CurveGrid g;
  g.monotone = std::is_sorted(values.begin(), values.end());
  g.times = std::move(times);
  g.values = std::move(values);
  return g;
}

CurveGrid SampleCurve(const std::function<double(double)>& f, double t_max, std::size_t n) {
  Require(n >= 2, "a curve grid needs at least two samples");
  Require(t_max > 0.0 && std::isfinite(t_max), "t_max must be positive");
  std::vector<double> times(n), values(n);
  const double step = t_max / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    times[k] = step * static_cast<double>(k);
    values[k] = f(times[k]);
  }
  return MakeCurveGrid(std::move(times), std::move(values));
}

CurveGrid Discretize(std::span<const double> coefficients, double t_max, std::size_t n) {
  Require(!coefficients.empty(), "polynomial needs at least one coefficient");
  return SampleCurve(
      [coefficients](double x) {
        double acc = 0.0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
        return acc;
      },
      t_max, n);
}

McspResult Mcsp(std::span<const double> v, const McspOptions& options) {
  Require(!v.empty(), "MCSP needs a nonempty vector");
  const std::size_t n = v.size();
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    Require(std::isfinite(v[i]), "MCSP entries must be finite");
    prefix[i + 1] = prefix[i] + v[i];
  }

  McspResult out;
  if (n == 1 && !options.include_full_sum) return out;
  if (n > 1) {
    // a_i = -S_i and b_j = S_{n-j} for i, j = 0..n-1, so c_m collects every
    // window of length n - m.
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = -prefix[i];
      b[i] = prefix[n - i];
    }
    const bool integral = std::all_of(v.begin(), v.end(),
                                      [](double x) { return x == std::floor(x); });
    MaxConvResult conv;
    if (integral) {
      MaxConvOptions o;
      o.backend = options.backend;
      conv = MaxConvolve(a, b, o);
      out.certified = conv.certified;
    } else {
      FloatConvOptions o;
      o.t = options.t.value_or(std::pow(static_cast<double>(n), 100.0));
      o.backend = options.backend;
      o.delta = 1e-3;
      conv = MaxConvolveFloat(a, b, o);
    }
    out.sums.resize(n - 1);
    out.error.resize(n - 1);
    for (std::size_t w = 1; w < n; ++w) {
      out.sums[w - 1] = conv.coefficients[n - w];
      if (integral && out.certified) {
        out.error[w - 1] = 0.0;
      } else {
        // Window length w has n - w + 1 candidates; the smooth value
        // overshoots the largest by at most log_t of that count.
        const double terms = static_cast<double>(n - w + 1);
        out.error[w - 1] = conv.raw_error[n - w] + std::log(terms) / std::log(conv.plan.t_star);
      }
    }
  } else {
    out.certified = v[0] == std::floor(v[0]);
  }
  if (options.include_full_sum) {
    out.sums.push_back(prefix[n]);
    out.error.push_back(0.0);
  }
  return out;
}

double DefaultServiceBase(std::size_t n) {
  Require(n >= 2, "service grids need at least two samples");
  return std::pow(1.0 / static_cast<double>(n - 1), 25.0);
}

CurveGrid MinPlusOnGrid(const CurveGrid& f, const CurveGrid& g, const ServiceOptions& options,
                        ConvolutionPlan* plan, double* max_error) {
  CheckSameGrid(f, g);
  const std::size_t n = f.size();
  const double t = options.t.value_or(DefaultServiceBase(n));
  Require(t > 0.0 && t < 1.0, "service base t must lie in (0, 1)");
  Require(options.alpha > 1.0, "service alpha must be > 1");
  // D_v(t, alpha) = -D_{-v}(1 / (alpha t), alpha): the small-t minimum
  // estimate is a large-base maximum estimate of the negated data.
  FloatConvOptions o;
  o.algorithm = ConvAlgorithm::kDifference;
  o.t = 1.0 / (options.alpha * t);
  o.alpha = options.alpha;
  o.delta = options.delta;
  o.backend = options.backend;
  const MaxConvResult conv = MinConvolveFloat(f.values, g.values, o);
  if (plan != nullptr) *plan = conv.plan;
  if (max_error != nullptr) {
    *max_error = *std::max_element(conv.raw_error.begin(), conv.raw_error.begin() + n);
  }
  std::vector<double> values(conv.coefficients.begin(), conv.coefficients.begin() + n);
  return MakeCurveGrid(f.times, std::move(values));
}

ServiceBounds ComputeServiceBounds(const CurveGrid& r, const CurveGrid& beta,
                                   const CurveGrid& gamma, const ServiceOptions& options) {
  CheckSameGrid(r, beta);
  CheckSameGrid(r, gamma);
  ServiceBounds out;
  double err_upper = 0.0;
  auto upper = std::async(std::launch::async, [&] {
    return MinPlusOnGrid(r, gamma, options, &out.upper_plan, &err_upper);
  });
  out.lower = MinPlusOnGrid(r, beta, options, &out.lower_plan, &out.max_raw_error);
  out.upper = upper.get();
  out.max_raw_error = std::max(out.max_raw_error, err_upper);
  return out;
}

}  // namespace smoothmax
