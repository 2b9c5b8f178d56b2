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

#ifndef SMOOTHMAX_VECTOR_HPP_
#define SMOOTHMAX_VECTOR_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace smoothmax {

// A nonempty tuple of finite reals. The integrality flag is computed once on
// construction and is exact: an entry is integral iff it equals its rounding.
class RealVector {
 public:
  explicit RealVector(std::vector<double> entries);
  RealVector(std::initializer_list<double> entries);

  std::span<const double> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  bool is_integral() const { return is_integral_; }

  double max() const { return max_; }
  double min() const { return min_; }

 private:
  std::vector<double> entries_;
  bool is_integral_ = true;
  double max_ = 0.0;
  double min_ = 0.0;
};

// Exact sort-and-count description of a vector. Distinct values are stored in
// decreasing order, so distinct[0] == max and gaps[0] == 0.
struct VectorSummary {
  double max = 0.0;
  double min = 0.0;
  std::vector<double> distinct;            // w_1 > w_2 > ... > w_l
  std::vector<std::size_t> multiplicity;   // multiplicity[i] counts distinct[i]
  std::vector<double> gaps;                // max - distinct[i]

  std::size_t distinct_count() const { return distinct.size(); }
  std::size_t max_multiplicity() const { return multiplicity.front(); }
  std::size_t min_multiplicity() const { return multiplicity.back(); }
  // g_2, the distance from the maximum to the next distinct value. Requires
  // at least two distinct values.
  double second_gap() const;
  std::size_t multiplicity_of(double value) const;
};

VectorSummary Summarize(const RealVector& v);

}  // namespace smoothmax

#endif  // SMOOTHMAX_VECTOR_HPP_
