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

#ifndef SMOOTHMAX_BOUNDS_HPP_
#define SMOOTHMAX_BOUNDS_HPP_

// Sufficient conditions on t for the approximations to land within delta of
// the maximum, and rounding procedures that turn one evaluation into a proof
// for integral input.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "smoothmax/vector.hpp"

namespace smoothmax {

struct BoundRequest {
  std::size_t n = 1;
  std::size_t mu_max = 1;  // multiplicity of the maximum, <= n
  double g2 = 1.0;         // lower bound on the gap below the maximum
  double delta = 1.0;
  std::optional<double> alpha;    // step ratio, for the difference bound
  std::optional<double> m_upper;  // upper estimate of max(v), for the p-norm bound
};

enum class Theorem { kL, kR, kD, kPNorm };

const char* TheoremName(Theorem t);

struct BoundResult {
  // Any evaluation point strictly above t_min satisfies the bound. For kPNorm
  // this is the exponent p (= u), not t.
  double t_min = 0.0;
  Theorem theorem = Theorem::kL;
  bool closed_form = false;
};

// t^{delta+g2} - mu t^{g2} - (n - mu) > 0.
BoundResult BoundL(const BoundRequest& req);
// max(e^{1/g2}, ((n - mu) g2 / (delta mu))^{1/g2}).
BoundResult BoundR(const BoundRequest& req);
// Largest of e^{1/g2}, alpha^{alpha^{-g2} / (1 - alpha^{-g2})} and
// ((n - mu) / (delta mu) * (1 - alpha^{-g2}) / log alpha)^{1/g2}.
BoundResult BoundD(const BoundRequest& req);
// e^{u(Delta+g2)} - e^{u g2} mu - (n - mu) > 0 with Delta = log(1 + delta/M).
// Entries are presumed rescaled into [0, 1].
BoundResult BoundPNorm(const BoundRequest& req);

// floor(L_v(n + 1)), which equals max(v) for every integral v.
std::int64_t CertifiedMax(const RealVector& v);

struct MaxWithMultiplicity {
  std::int64_t max = 0;
  std::int64_t multiplicity = 0;
};

// (floor L, floor t^{L - floor L}) at t = n + 1.
MaxWithMultiplicity CertifiedMultiplicity(const RealVector& v);

// Rational combination of R^{(1)}, R^{(2)}, R^{(3)} converging to max(v) with
// error O(t^{-g2-1}). Throws kNumerical when the denominator degenerates
// (constant vectors, or t so large that every offset underflows).
double CombinedMax(const RealVector& v, double t);

// (R1 - 3 R2 + 2 R3) / (R2 - R1) = g2 + O(1/t).
double CombinedGap(const RealVector& v, double t);

// Second-largest distinct value, from the certified maximum and a rounded gap
// estimate. There is no rounding bound for the gap, so this is a heuristic:
// t doubles from max(e, n) until two consecutive estimates round alike.
struct SecondValueResult {
  std::int64_t value = 0;
  std::int64_t max = 0;
  double gap_estimate = 0.0;
  double t = 0.0;
  int doublings = 0;
};
SecondValueResult SecondValue(const RealVector& v);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

inline constexpr int kMaxStirlingRank = 20;

// Lower-triangular r x r matrix mapping (D^{(1)}, ..., D^{(r)}) to
// (R^{(1)}, ..., R^{(r)}). Entry (i, j) = (-1)^{i+1} / (i-1)! * s(i, j).
std::vector<std::vector<Rational>> StirlingMatrix(int r);

}  // namespace smoothmax

#endif  // SMOOTHMAX_BOUNDS_HPP_
