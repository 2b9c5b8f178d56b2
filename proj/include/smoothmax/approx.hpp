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

#ifndef SMOOTHMAX_APPROX_HPP_
#define SMOOTHMAX_APPROX_HPP_

// Smooth approximations of max(v).
//
// Everything is evaluated in the u = log(t) domain with exponentials shifted by
// max(v), so the power sum F_v(t) = sum_i t^{v_i} is never formed directly:
//
//   log F_v(e^u) = M*u + log sum_i exp((v_i - M) * u).
//
// u-derivatives of log F_v(e^u) are the cumulants of the discrete distribution
// with atoms v_i and weights proportional to exp(v_i * u).

#include <optional>
#include <vector>

#include "smoothmax/vector.hpp"

namespace smoothmax {

enum class Method { kL, kR, kRk, kD, kPNorm, kContour };

const char* MethodName(Method m);

struct ApproxResult {
  double value = 0.0;
  Method method = Method::kL;
  double t = 0.0;      // evaluation point; the exponent p for kPNorm
  int k = 0;           // derivative order for kRk / kContour
  double alpha = 0.0;  // step ratio for kD
  bool certified = false;
  std::optional<double> target_delta;
};

inline constexpr int kMaxRatioOrder = 8;

// log F_v(e^u) for u > 0. Never overflows for finite u.
double LogPowerSum(const RealVector& v, double u);

// log F_v(e^u) for any real u; used where the sign of u varies.
double LogPowerSumAnyScale(const RealVector& v, double u);

// L_v(t) = log_t F_v(t). Always >= max(v).
ApproxResult LogSumExpMax(const RealVector& v, double t);

// R_v(t) = t F'(t) / F(t), the softmax-weighted mean. Always in [min, max].
ApproxResult RatioMax(const RealVector& v, double t);

// R_v^{(k)}(t) = -(-t)^k / (k-1)! * d^k/dt^k log F_v(t), for 1 <= k <= 8.
ApproxResult HigherRatioMax(const RealVector& v, double t, int k);

// D_v(t, alpha) = log_alpha(F_v(alpha t) / F_v(t)), alpha > 0, alpha != 1.
ApproxResult DifferenceMax(const RealVector& v, double t, double alpha);

// ||v||_p for nonnegative v. Zero entries contribute nothing to the power sum.
ApproxResult PNormMax(const RealVector& v, double p);

// Trapezoid-rule estimate of the contour integral of R^{(k)}(1/z)/z over
// |z| = r with n_points nodes. Requires integral v; r must keep every root of
// F_v strictly inside |t| < 1/r, which the caller is responsible for.
double ContourMax(const RealVector& v, int k, double r, int n_points);

inline constexpr double kDefaultContourRadius = 0.1;
inline constexpr int kDefaultContourPoints = 64;

// The first `order` u-derivatives D^{(1)}, ..., D^{(order)} of log F_v(e^u)
// at u = log(t), i.e. the mean followed by the higher cumulants.
std::vector<double> LogDerivatives(const RealVector& v, double t, int order);

// R^{(k)}_v(t) - max(v) for k = 1..max_order, evaluated from one set of
// shifted cumulants. Keeps full relative precision in the (small) offsets.
std::vector<double> HigherRatioOffsets(const RealVector& v, double t, int max_order);

// Signed Stirling numbers of the first kind s(k, j), 0 <= j <= k.
std::vector<std::vector<double>> SignedStirlingFirstKind(int max_k);

}  // namespace smoothmax

#endif  // SMOOTHMAX_APPROX_HPP_
