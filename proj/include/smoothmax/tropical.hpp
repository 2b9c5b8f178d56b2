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

#ifndef SMOOTHMAX_TROPICAL_HPP_
#define SMOOTHMAX_TROPICAL_HPP_

// Plot data for the amoeba and tropicalization of y = sum_i t^{v_i}.

#include <array>
#include <cstdint>
#include <vector>

#include "smoothmax/vector.hpp"

namespace smoothmax {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const LatticePoint&) const = default;
};

struct NewtonPolygon {
  // (M, 0), (min v, 0), (0, 1); the first two coincide when M == min v and
  // only two points are reported.
  std::vector<LatticePoint> vertices;
  bool degenerate = false;
};

NewtonPolygon MakeNewtonPolygon(const RealVector& v);

struct Line2D {
  enum class Kind { kSlopeIntercept, kVertical };
  enum class Label { kMaxTentacle, kMinTentacle };
  Kind kind = Kind::kSlopeIntercept;
  double slope = 0.0;
  double intercept = 0.0;  // s at u = 0, or the u position of a vertical line
  Label label = Label::kMaxTentacle;
};

const char* LineKindName(Line2D::Kind k);
const char* LineLabelName(Line2D::Label l);

// s = log(mu_M) + M u and s = log(mu_m) + m u.
std::array<Line2D, 2> TentacleLines(const RealVector& v);

struct BoundaryPoint {
  double u = 0.0;
  double s = 0.0;
};

// Samples (u, log sum_i e^{u v_i}) uniformly on [u_min, u_max].
std::vector<BoundaryPoint> AmoebaUpperBoundary(const RealVector& v, double u_min, double u_max,
                                               std::size_t samples);

// Primitive outer normals of the Newton polygon edges:
// (1, M), (0, -1) and (-1, -min v).
std::vector<LatticePoint> TropicalRays(const RealVector& v);

}  // namespace smoothmax

#endif  // SMOOTHMAX_TROPICAL_HPP_
