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

#ifndef SMOOTHMAX_APPLICATIONS_HPP_
#define SMOOTHMAX_APPLICATIONS_HPP_

// Maximum consecutive subsums and network-calculus service bounds.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "smoothmax/maxconv.hpp"

namespace smoothmax {

// Uniformly sampled function T_k = k * step, k = 0..N-1.
struct CurveGrid {
  std::vector<double> times;
  std::vector<double> values;
  bool monotone = false;  // values nondecreasing

  std::size_t size() const { return values.size(); }
  double step() const { return times[1] - times[0]; }
};

// Validates N >= 2, T_0 = 0, uniform spacing (1e-9 relative) and finite values.
CurveGrid MakeCurveGrid(std::vector<double> times, std::vector<double> values);
CurveGrid SampleCurve(const std::function<double(double)>& f, double t_max, std::size_t n);

// Horner evaluation of c_0 + c_1 T + c_2 T^2 + ... on N points of [0, t_max].
CurveGrid Discretize(std::span<const double> coefficients, double t_max, std::size_t n);

// Fitted input function R(T), ascending coefficients. Not monotone on all of
// [0, 10]: it dips slightly on roughly [1.41, 1.96] and [5.63, 5.88].
inline constexpr std::array<double, 8> kServiceInputCoefficients = {
    0.0, 1.6738, -0.7492, -0.08694, 0.1085, -0.01101, -0.001579, 0.0002085};
inline constexpr double kServiceDelay = 3.0;
inline constexpr double kServiceHorizon = 10.0;

struct McspOptions {
  bool include_full_sum = true;
  // Evaluation point for non-integral input; default n^100, which keeps the
  // smooth overestimate within 0.01 of each window maximum.
  std::optional<double> t;
  BackendChoice backend = BackendChoice::kAuto;
};

struct McspResult {
  // sums[k-1] is the largest sum of k consecutive entries, k = 1..n (k = n
  // only with include_full_sum).
  std::vector<double> sums;
  std::vector<double> error;  // absolute error bound per entry (0 when certified)
  bool certified = false;
};

McspResult Mcsp(std::span<const double> v, const McspOptions& options = {});

struct ServiceOptions {
  double alpha = 1.01;
  std::optional<double> t;  // small base; default (1/(N-1))^25
  double delta = 1e-3;
  BackendChoice backend = BackendChoice::kAuto;
};

struct ServiceBounds {
  CurveGrid lower;  // min_{s<=k} (R_s + beta_{k-s})
  CurveGrid upper;  // min_{s<=k} (R_s + gamma_{k-s})
  ConvolutionPlan lower_plan;
  ConvolutionPlan upper_plan;
  double max_raw_error = 0.0;
};

// Min-plus convolution of two sampled curves on a shared grid by the
// difference surrogate at small t, first N coefficients.
CurveGrid MinPlusOnGrid(const CurveGrid& f, const CurveGrid& g, const ServiceOptions& options,
                        ConvolutionPlan* plan = nullptr, double* max_error = nullptr);
ServiceBounds ComputeServiceBounds(const CurveGrid& r, const CurveGrid& beta,
                                   const CurveGrid& gamma, const ServiceOptions& options = {});

double DefaultServiceBase(std::size_t n);

}  // namespace smoothmax

#endif  // SMOOTHMAX_APPLICATIONS_HPP_
