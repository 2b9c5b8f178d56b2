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

#ifndef SMOOTHMAX_MAXCONV_HPP_
#define SMOOTHMAX_MAXCONV_HPP_

// Max-plus and min-plus convolution through smooth maximum approximations
// of power-sum convolutions.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "smoothmax/convolution.hpp"

namespace smoothmax {

enum class Rounding { kFloor, kCeil, kNearest };
enum class ConvAlgorithm { kLogSumExp, kDifference };
enum class BackendChoice { kAuto, kFftFloat, kExactInt, kDirect };

const char* RoundingName(Rounding r);
const char* AlgorithmName(ConvAlgorithm a);

struct ConvolutionPlan {
  Backend backend = Backend::kFftFloat;
  double t_star = 0.0;
  std::optional<double> alpha_star;
  Rounding rounding = Rounding::kFloor;
  double fft_error_bound = 0.0;  // absolute, per coefficient, shifted power-sum domain
  std::size_t patched = 0;       // coefficients recomputed directly after a failed audit
};

struct MaxConvResult {
  std::vector<double> coefficients;
  bool certified = false;
  ConvolutionPlan plan;
  std::vector<double> raw_logs;   // smooth values before rounding
  std::vector<double> raw_error;  // bound on the numerical error of raw_logs
  // Integer-base exact runs only: l_k(t*) = exact_sums[k] * t*^exact_exponent_offset.
  std::vector<mpz_class> exact_sums;
  double exact_exponent_offset = 0.0;
};

struct MaxConvOptions {
  ConvAlgorithm algorithm = ConvAlgorithm::kLogSumExp;
  std::optional<double> t_star;
  std::optional<double> alpha_star;
  BackendChoice backend = BackendChoice::kAuto;
  bool nearest = false;  // two-sided rounding instead of floor/ceil
};

// Integer max-plus convolution c_k = max_i (a_i + b_{k-i}).
MaxConvResult MaxConvolve(std::span<const double> a, std::span<const double> b,
                          const MaxConvOptions& options);
MaxConvResult MaxConvolveL(std::span<const double> a, std::span<const double> b,
                           std::optional<double> t_star = std::nullopt,
                           BackendChoice backend = BackendChoice::kAuto);
MaxConvResult MaxConvolveD(std::span<const double> a, std::span<const double> b,
                           std::optional<double> t_star = std::nullopt,
                           std::optional<double> alpha_star = std::nullopt,
                           BackendChoice backend = BackendChoice::kAuto);
// min-plus, as -MaxConvolve(-a, -b) with the rounding direction flipped.
MaxConvResult MinConvolve(std::span<const double> a, std::span<const double> b,
                          const MaxConvOptions& options);

struct FloatConvOptions {
  ConvAlgorithm algorithm = ConvAlgorithm::kLogSumExp;
  double t = 0.0;
  std::optional<double> alpha;  // kDifference only
  double delta = 1e-3;          // audit tolerance on the smooth values
  BackendChoice backend = BackendChoice::kAuto;
};

// Real-valued pipeline without rounding; never certified.
MaxConvResult MaxConvolveFloat(std::span<const double> a, std::span<const double> b,
                               const FloatConvOptions& options);
MaxConvResult MinConvolveFloat(std::span<const double> a, std::span<const double> b,
                               const FloatConvOptions& options);

}  // namespace smoothmax

#endif  // SMOOTHMAX_MAXCONV_HPP_
