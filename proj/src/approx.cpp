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

#include "smoothmax/approx.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "numerics.hpp"
#include "smoothmax/error.hpp"

namespace smoothmax {
namespace {

double LogOf(double t) {
  if (!(t > 1.0) || !std::isfinite(t)) {
    Fail(ErrorKind::kInvalidArgument, "evaluation point t must be finite and > 1");
  }
  return std::log(t);
}

void CheckOrder(int k) {
  if (k < 1 || k > kMaxRatioOrder) {
    Fail(ErrorKind::kInvalidArgument,
         "derivative order must be in [1, " + std::to_string(kMaxRatioOrder) + "]");
  }
}

// Row k of the change of basis from D^{(j)} to R^{(k)}:
// (-1)^{k+1} / (k-1)! * s(k, j).
std::vector<double> RatioRow(int k) {
  static const auto stirling = SignedStirlingFirstKind(kMaxRatioOrder);
  std::vector<double> row(k + 1, 0.0);
  double factorial = 1.0;
  for (int i = 2; i < k; ++i) factorial *= i;
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;
  for (int j = 1; j <= k; ++j) row[j] = sign * stirling[k][j] / factorial;
  return row;
}

// R^{(k)} - M from shifted cumulants. The D^{(1)} coefficient is always 1, so
// M enters only through kappa_1.
template <typename Scalar>
Scalar RatioOffset(const std::vector<Scalar>& kappa, int k) {
  const auto row = RatioRow(k);
  Scalar acc = kappa[1];
  for (int j = 2; j <= k; ++j) acc += row[j] * kappa[j];
  return acc;
}

}  // namespace

const char* MethodName(Method m) {
  switch (m) {
    case Method::kL: return "L";
    case Method::kR: return "R";
    case Method::kRk: return "Rk";
    case Method::kD: return "D";
    case Method::kPNorm: return "PNORM";
    case Method::kContour: return "CONTOUR";
  }
  return "?";
}

std::vector<std::vector<double>> SignedStirlingFirstKind(int max_k) {
  // Coefficients of the falling factorial x (x-1) ... (x-k+1).
  std::vector<std::vector<double>> s(max_k + 1, std::vector<double>(max_k + 1, 0.0));
  s[0][0] = 1.0;
  for (int k = 0; k < max_k; ++k) {
    for (int j = 0; j <= k + 1; ++j) {
      const double shifted = j > 0 ? s[k][j - 1] : 0.0;
      const double same = j <= k ? s[k][j] : 0.0;
      s[k + 1][j] = shifted - k * same;
    }
  }
  return s;
}

double LogPowerSum(const RealVector& v, double u) {
  if (!(u > 0.0) || !std::isfinite(u)) {
    Fail(ErrorKind::kInvalidArgument, "u must be finite and > 0");
  }
  return v.max() * u + detail::ShiftedLogSum(v.entries(), v.max(), u);
}

double LogPowerSumAnyScale(const RealVector& v, double u) {
  if (!std::isfinite(u)) Fail(ErrorKind::kInvalidArgument, "u must be finite");
  // Shift by whichever extreme dominates for this sign of u.
  const double ref = u >= 0.0 ? v.max() : v.min();
  return ref * u + detail::ShiftedLogSum(v.entries(), ref, u);
}

ApproxResult LogSumExpMax(const RealVector& v, double t) {
  const double u = LogOf(t);
  ApproxResult r;
  r.method = Method::kL;
  r.t = t;
  // The shifted sum is >= 1, so the correction is >= 0 and value >= M exactly.
  r.value = v.max() + detail::ShiftedLogSum(v.entries(), v.max(), u) / u;
  return r;
}

ApproxResult RatioMax(const RealVector& v, double t) {
  const double u = LogOf(t);
  double total = 0.0;
  double deficit = 0.0;
  for (double x : v.entries()) {
    const double w = std::exp((x - v.max()) * u);
    total += w;
    deficit += w * (v.max() - x);
  }
  ApproxResult r;
  r.method = Method::kR;
  r.t = t;
  r.value = std::max(v.max() - deficit / total, v.min());
  return r;
}

ApproxResult HigherRatioMax(const RealVector& v, double t, int k) {
  CheckOrder(k);
  const double u = LogOf(t);
  ApproxResult r;
  r.method = Method::kRk;
  r.t = t;
  r.k = k;
  if (k == 1) {
    r.value = RatioMax(v, t).value;
    return r;
  }
  std::vector<double> kappa;
  if (!detail::ShiftedCumulants<double>(v.entries(), v.max(), u, k, kappa)) {
    Fail(ErrorKind::kNumerical, "weight total underflowed");
  }
  r.value = v.max() + RatioOffset(kappa, k);
  return r;
}

ApproxResult DifferenceMax(const RealVector& v, double t, double alpha) {
  const double u = LogOf(t);
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    Fail(ErrorKind::kInvalidArgument, "alpha must be positive and different from 1");
  }
  const double log_alpha = std::log(alpha);
  const double lo = detail::ShiftedLogSum(v.entries(), v.max(), u);
  const double hi = detail::ShiftedLogSum(v.entries(), v.max(), u + log_alpha);
  ApproxResult r;
  r.method = Method::kD;
  r.t = t;
  r.alpha = alpha;
  r.value = v.max() + (hi - lo) / log_alpha;
  return r;
}

ApproxResult PNormMax(const RealVector& v, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    Fail(ErrorKind::kInvalidArgument, "p must be finite and > 0");
  }
  std::vector<double> logs;
  logs.reserve(v.size());
  for (double x : v.entries()) {
    if (x < 0.0) Fail(ErrorKind::kDomain, "p-norm requires nonnegative entries");
    if (x > 0.0) logs.push_back(std::log(x));
  }
  ApproxResult r;
  r.method = Method::kPNorm;
  r.t = p;
  if (logs.empty()) return r;
  const double top = *std::max_element(logs.begin(), logs.end());
  r.value = std::exp(top + detail::ShiftedLogSum(logs, top, p) / p);
  return r;
}

double ContourMax(const RealVector& v, int k, double r, int n_points) {
  if (!v.is_integral()) Fail(ErrorKind::kDomain, "contour estimator requires integral input");
  CheckOrder(k);
  Require(r > 0.0 && std::isfinite(r), "contour radius must be positive");
  Require(n_points >= 4, "contour needs at least 4 nodes");

  const double M = v.max();
  double acc = 0.0;
  std::vector<std::complex<double>> kappa;
  for (int j = 0; j < n_points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n_points;
    // t = 1 / (r e^{i theta}); any branch of log works for integral exponents.
    const std::complex<double> u(-std::log(r), -theta);
    if (!detail::ShiftedCumulants<std::complex<double>>(v.entries(), M, u, k, kappa)) {
      Fail(ErrorKind::kNumerical, "power sum vanished or underflowed on the contour");
    }
    const std::complex<double> value = M + RatioOffset(kappa, k);
    if (!std::isfinite(value.real())) {
      Fail(ErrorKind::kNumerical, "non-finite value on the contour");
    }
    acc += value.real();
  }
  return acc / n_points;
}

std::vector<double> HigherRatioOffsets(const RealVector& v, double t, int max_order) {
  CheckOrder(max_order);
  const double u = LogOf(t);
  std::vector<double> kappa;
  if (!detail::ShiftedCumulants<double>(v.entries(), v.max(), u, max_order, kappa)) {
    Fail(ErrorKind::kNumerical, "weight total underflowed");
  }
  std::vector<double> out(max_order);
  for (int k = 1; k <= max_order; ++k) out[k - 1] = RatioOffset(kappa, k);
  return out;
}

std::vector<double> LogDerivatives(const RealVector& v, double t, int order) {
  const double u = LogOf(t);
  Require(order >= 1, "order must be >= 1");
  std::vector<double> kappa;
  if (!detail::ShiftedCumulants<double>(v.entries(), v.max(), u, order, kappa)) {
    Fail(ErrorKind::kNumerical, "weight total underflowed");
  }
  kappa[1] += v.max();
  return {kappa.begin() + 1, kappa.end()};
}

}  // namespace smoothmax
