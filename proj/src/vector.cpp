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

#include "smoothmax/vector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "smoothmax/error.hpp"

namespace smoothmax {

RealVector::RealVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
  Require(!entries_.empty(), "vector must have at least one entry");
  for (double x : entries_) {
    if (!std::isfinite(x)) Fail(ErrorKind::kDomain, "vector entries must be finite");
    if (x != std::round(x)) is_integral_ = false;
  }
  auto [lo, hi] = std::minmax_element(entries_.begin(), entries_.end());
  min_ = *lo;
  max_ = *hi;
}

RealVector::RealVector(std::initializer_list<double> entries)
    : RealVector(std::vector<double>(entries)) {}

double VectorSummary::second_gap() const {
  if (distinct.size() < 2) {
    Fail(ErrorKind::kDomain, "second gap needs at least two distinct values");
  }
  return gaps[1];
}

std::size_t VectorSummary::multiplicity_of(double value) const {
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    if (distinct[i] == value) return multiplicity[i];
  }
  return 0;
}

VectorSummary Summarize(const RealVector& v) {
  std::vector<double> sorted(v.entries().begin(), v.entries().end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  VectorSummary s;
  s.max = sorted.front();
  s.min = sorted.back();
  for (double x : sorted) {
    if (s.distinct.empty() || s.distinct.back() != x) {
      s.distinct.push_back(x);
      s.multiplicity.push_back(1);
      s.gaps.push_back(s.max - x);
    } else {
      ++s.multiplicity.back();
    }
  }
  return s;
}

}  // namespace smoothmax
