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

#include "smoothmax/io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "smoothmax/error.hpp"

namespace smoothmax {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseNumber(std::string_view token, std::size_t line) {
  const std::string copy(token);
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size() || errno == ERANGE || copy.empty()) {
    Fail(ErrorKind::kIo, "line " + std::to_string(line) + ": not a number: '" + copy + "'");
  }
  return x;
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    out.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::string_view StripComment(std::string_view line) {
  const auto hash = line.find('#');
  return Trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

}  // namespace

std::string FormatNumber(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  for (int precision : {15, 16, 17}) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

std::vector<double> ParseVector(std::string_view text) {
  std::vector<double> out;
  const auto lines = Lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view body = StripComment(lines[i]);
    while (!body.empty()) {
      const auto comma = body.find(',');
      const std::string_view token = Trim(body.substr(0, comma));
      if (token.empty()) Fail(ErrorKind::kIo, "line " + std::to_string(i + 1) + ": empty field");
      out.push_back(ParseNumber(token, i + 1));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  }
  if (out.empty()) Fail(ErrorKind::kIo, "no numbers found");
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorKind::kIo, "cannot write '" + path + "'");
  out << text;
  if (!out) Fail(ErrorKind::kIo, "write failed for '" + path + "'");
}

std::vector<double> ReadVectorFile(const std::string& path) {
  return ParseVector(ReadTextFile(path));
}

std::string FormatVector(std::span<const double> v) {
  std::string out;
  for (double x : v) {
    out += FormatNumber(x);
    out += '\n';
  }
  return out;
}

void WriteVectorFile(const std::string& path, std::span<const double> v) {
  WriteTextFile(path, FormatVector(v));
}

CurveGrid ParseCurveCsv(std::string_view text) {
  const auto lines = Lines(text);
  std::vector<double> times, values;
  bool header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view row = StripComment(lines[i]);
    if (row.empty()) continue;
    if (!header) {
      if (row != "T,value") Fail(ErrorKind::kIo, "curve CSV must start with header 'T,value'");
      header = true;
      continue;
    }
    const auto comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
      Fail(ErrorKind::kIo, "line " + std::to_string(i + 1) + ": expected two fields");
    }
    times.push_back(ParseNumber(Trim(row.substr(0, comma)), i + 1));
    values.push_back(ParseNumber(Trim(row.substr(comma + 1)), i + 1));
  }
  if (!header) Fail(ErrorKind::kIo, "curve CSV is empty");
  return MakeCurveGrid(std::move(times), std::move(values));
}

CurveGrid ReadCurveCsv(const std::string& path) { return ParseCurveCsv(ReadTextFile(path)); }

std::string FormatCurveCsv(const CurveGrid& curve) {
  std::string out = "T,value\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out += FormatNumber(curve.times[i]) + ',' + FormatNumber(curve.values[i]) + '\n';
  }
  return out;
}

void WriteCurveCsv(const std::string& path, const CurveGrid& curve) {
  WriteTextFile(path, FormatCurveCsv(curve));
}

std::string FormatBoundaryCsv(std::span<const BoundaryPoint> points) {
  std::string out = "u,s\n";
  for (const auto& p : points) out += FormatNumber(p.u) + ',' + FormatNumber(p.s) + '\n';
  return out;
}

std::string FormatLinesCsv(std::span<const Line2D> lines) {
  std::string out = "kind,slope,intercept,label\n";
  for (const auto& l : lines) {
    out += std::string(LineKindName(l.kind)) + ',' + FormatNumber(l.slope) + ',' +
           FormatNumber(l.intercept) + ',' + LineLabelName(l.label) + '\n';
  }
  return out;
}

}  // namespace smoothmax
