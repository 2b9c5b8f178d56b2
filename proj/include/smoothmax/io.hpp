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

#ifndef SMOOTHMAX_IO_HPP_
#define SMOOTHMAX_IO_HPP_

// Text formats: vector files, curve CSV and tropical plot data.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smoothmax/applications.hpp"
#include "smoothmax/tropical.hpp"

namespace smoothmax {

// Shortest form that round-trips ("%.17g" fallback); "-0" prints as "0".
std::string FormatNumber(double x);

// Numbers separated by newlines and/or commas; '#' starts a comment.
std::vector<double> ParseVector(std::string_view text);
std::vector<double> ReadVectorFile(const std::string& path);
std::string FormatVector(std::span<const double> v);  // one number per line
void WriteVectorFile(const std::string& path, std::span<const double> v);

// Header `T,value`, one row per sample.
CurveGrid ParseCurveCsv(std::string_view text);
CurveGrid ReadCurveCsv(const std::string& path);
std::string FormatCurveCsv(const CurveGrid& curve);
void WriteCurveCsv(const std::string& path, const CurveGrid& curve);

// Header `u,s`.
std::string FormatBoundaryCsv(std::span<const BoundaryPoint> points);
// Header `kind,slope,intercept,label`.
std::string FormatLinesCsv(std::span<const Line2D> lines);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);

}  // namespace smoothmax

#endif  // SMOOTHMAX_IO_HPP_
