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

#ifndef SMOOTHMAX_SRC_NUMERICS_HPP_
#define SMOOTHMAX_SRC_NUMERICS_HPP_

// Shifted power-sum kernels shared by the evaluators.

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace smoothmax::detail {

// log sum_i exp((v_i - ref) * u), stable for either sign of u.
inline double ShiftedLogSum(std::span<const double> v, double ref, double u) {
  double top = -INFINITY;
  for (double x : v) top = std::max(top, (x - ref) * u);
  double sum = 0.0;
  for (double x : v) sum += std::exp((x - ref) * u - top);
  return top + std::log(sum);
}

// Cumulants kappa_1..kappa_order of the atoms (v_i - ref) under weights
// proportional to exp((v_i - ref) * u). Works for real or complex u; in the
// complex case the weights are the analytic continuation, so the outputs are
// the u-derivatives of log sum_i exp((v_i - ref) u).
//
// Returns false when the weight total vanishes (underflow or a root of F_v).
template <typename Scalar>
bool ShiftedCumulants(std::span<const double> v, double ref, Scalar u,
                      int order, std::vector<Scalar>& kappa) {
  const std::size_t n = v.size();
  std::vector<Scalar> w(n);
  Scalar total = 0;
  Scalar first = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = v[i] - ref;
    w[i] = std::exp(Scalar(x) * u);
    total += w[i];
    first += w[i] * x;
  }
  if (!(std::abs(total) > 1e-280) || !std::isfinite(std::abs(total))) return false;
  const Scalar mean = first / total;

  // Central moments c_2..c_order.
  std::vector<Scalar> central(order + 1, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar d = Scalar(v[i] - ref) - mean;
    Scalar p = d;
    for (int j = 2; j <= order; ++j) {
      p *= d;
      central[j] += w[i] * p;
    }
  }
  for (int j = 2; j <= order; ++j) central[j] /= total;

  // kappa_m = c_m - sum_{j=2}^{m-2} C(m-1, j-1) kappa_j c_{m-j}
  kappa.assign(order + 1, Scalar(0));
  kappa[1] = mean;
  for (int m = 2; m <= order; ++m) {
    Scalar acc = central[m];
    double binom = 1.0;  // C(m-1, j-1), updated incrementally
    for (int j = 2; j <= m - 2; ++j) {
      binom = binom * static_cast<double>(m - j + 1) / static_cast<double>(j - 1);
      acc -= binom * kappa[j] * central[m - j];
    }
    kappa[m] = acc;
  }
  return true;
}

}  // namespace smoothmax::detail

#endif  // SMOOTHMAX_SRC_NUMERICS_HPP_
