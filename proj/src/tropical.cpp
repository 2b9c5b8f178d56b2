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

#include "smoothmax/tropical.hpp"

#include <cmath>
#include <numeric>

#include "smoothmax/approx.hpp"
#include "smoothmax/error.hpp"

namespace smoothmax {
namespace {

std::int64_t Lattice(double x) {
  if (std::abs(x) > 9.0e15) Fail(ErrorKind::kRange, "exponent too large for a lattice point");
  return static_cast<std::int64_t>(x);
}

void RequireIntegral(const RealVector& v) {
  if (!v.is_integral()) Fail(ErrorKind::kDomain, "tropical data needs integral exponents");
}

LatticePoint Primitive(std::int64_t x, std::int64_t y) {
  const std::int64_t g = std::gcd(x, y);
  return g == 0 ? LatticePoint{x, y} : LatticePoint{x / g, y / g};
}

}  // namespace

const char* LineKindName(Line2D::Kind k) {
  return k == Line2D::Kind::kVertical ? "VERTICAL" : "SLOPE_INTERCEPT";
}

const char* LineLabelName(Line2D::Label l) {
  return l == Line2D::Label::kMaxTentacle ? "MAX_TENTACLE" : "MIN_TENTACLE";
}

NewtonPolygon MakeNewtonPolygon(const RealVector& v) {
  RequireIntegral(v);
  NewtonPolygon p;
  const LatticePoint top{Lattice(v.max()), 0};
  const LatticePoint bottom{Lattice(v.min()), 0};
  p.degenerate = top == bottom;
  p.vertices.push_back(top);
  if (!p.degenerate) p.vertices.push_back(bottom);
  p.vertices.push_back({0, 1});
  return p;
}

std::array<Line2D, 2> TentacleLines(const RealVector& v) {
  RequireIntegral(v);
  const VectorSummary s = Summarize(v);
  Line2D hi, lo;
  hi.slope = s.max;
  hi.intercept = std::log(static_cast<double>(s.max_multiplicity()));
  hi.label = Line2D::Label::kMaxTentacle;
  lo.slope = s.min;
  lo.intercept = std::log(static_cast<double>(s.min_multiplicity()));
  lo.label = Line2D::Label::kMinTentacle;
  return {hi, lo};
}

std::vector<BoundaryPoint> AmoebaUpperBoundary(const RealVector& v, double u_min, double u_max,
                                               std::size_t samples) {
  Require(samples >= 2, "boundary needs at least two samples");
  Require(std::isfinite(u_min) && std::isfinite(u_max) && u_min < u_max,
          "boundary range must satisfy u_min < u_max");
  std::vector<BoundaryPoint> out(samples);
  const double step = (u_max - u_min) / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const double u = i + 1 == samples ? u_max : u_min + step * static_cast<double>(i);
    out[i] = {u, LogPowerSumAnyScale(v, u)};
  }
  return out;
}

std::vector<LatticePoint> TropicalRays(const RealVector& v) {
  RequireIntegral(v);
  if (v.max() == v.min()) Fail(ErrorKind::kDomain, "Newton polygon is degenerate when max == min");
  const std::int64_t hi = Lattice(v.max());
  const std::int64_t lo = Lattice(v.min());
  return {Primitive(1, hi), {0, -1}, Primitive(-1, -lo)};
}

}  // namespace smoothmax
