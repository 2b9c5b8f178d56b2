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


#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "smoothmax/approx.hpp"
#include "smoothmax/bounds.hpp"
#include "smoothmax/error.hpp"
#include "smoothmax/experiment.hpp"
#include "smoothmax/io.hpp"

using namespace smoothmax;

namespace {

std::vector<std::vector<std::string>> Rows(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    rows.push_back(f);
  }
  return rows;
}

}  // namespace

TEST_CASE("seeded streams are reproducible and distinct") {
  auto a = CellStream(42, 3, 1, 0), b = CellStream(42, 3, 1, 0), c = CellStream(42, 1, 3, 0);
  const auto x = a(), y = b(), z = c();
  CHECK(x == y);
  CHECK(x != z);
  auto g = CellStream(1, 2, 3, 4);
  for (int i = 0; i < 1000; ++i) {
    const double u = UniformUnit(g);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const auto k = UniformInt(g, -3, 3);
    CHECK(k >= -3);
    CHECK(k <= 3);
  }
}

TEST_CASE("t* search") {
  const RealVector v2{1, 2, 3, 4, 5, 6, 7, 7, 7, 7, 7};
  CHECK(FindTStar(v2, Method::kL, 1.0) <= 6.0);
  CHECK(FindTStar(RealVector{3, 3, 3}, Method::kR, 0.1) == kTStarStart);
  std::mt19937_64 g(3);
  for (int rep = 0; rep < 30; ++rep) {
    std::vector<double> v;
    const std::size_t n = 2 + g() % 30;
    for (std::size_t i = 0; i < n; ++i) v.push_back(double(g() % 10));
    const RealVector rv(v);
    const auto s = Summarize(rv);
    BoundRequest req;
    req.n = n;
    req.mu_max = s.max_multiplicity();
    req.g2 = 1;
    CHECK(FindTStar(rv, Method::kL, 1.0) <= BoundL(req).t_min * (1 + 2 * kTStarRelTol));
    if (s.distinct_count() > 1) {
      CHECK(FindTStar(rv, Method::kR, 1.0) <= BoundR(req).t_min * (1 + 2 * kTStarRelTol));
    }
  }
  CHECK_THROWS_AS(FindTStar(v2, Method::kD, 1.0), Error);
}

TEST_CASE("integer heatmap is deterministic and independent of threads") {
  ExperimentConfig cfg;
  cfg.n_max = 20;
  cfg.reps = 5;
  const auto one = RunExperiment(cfg);
  cfg.threads = 4;
  const auto four = RunExperiment(cfg);
  CHECK(one == four);
  CHECK(one == RunExperiment(cfg));
  const auto rows = Rows(one);
  CHECK(rows[0] == std::vector<std::string>{"n", "mu", "statistic", "mean_tstar_L",
                                            "mean_tstar_R", "censored"});
  CHECK(rows.size() == 1 + 20 * 21 / 2);
  cfg.seed = 43;
  CHECK(RunExperiment(cfg) != one);
}

TEST_CASE("uniform heatmap") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::kUniformHeatmap;
  cfg.n_max = 8;
  cfg.reps = 3;
  const auto rows = Rows(RunExperiment(cfg));
  CHECK(rows[0].size() == 7);
  CHECK(rows[0][5] == "alpha");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::isfinite(std::stod(rows[i][2])));
  CHECK(DeltaFor(DeltaRule::kInvN, 4) == 0.25);
  CHECK(DeltaFor(DeltaRule::kExp1, 4) == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("cluster experiment ordering") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::kCluster;
  cfg.g_steps = 10;
  cfg.eps_steps = 10;
  cfg.reps = 10;
  const auto rows = Rows(RunExperiment(cfg));
  REQUIRE(rows.size() == 1 + 10 * 11);
  auto cell = [&](int gi, int ei) { return rows[1 + (gi - 1) * 11 + ei]; };
  // Small gap with large noise does worst; large gap with large noise does well.
  const auto bad = cell(1, 10), good = cell(10, 10);
  CHECK(std::stod(bad[2]) > std::stod(good[2]));
  CHECK(std::stoi(good[3]) >= std::stoi(bad[3]));
  CHECK(std::stoi(good[3]) >= 8);
}

TEST_CASE("ratio at any log scale") {
  const RealVector v{0, 1, 2};
  CHECK(RatioAtLogScale(v, std::log(3.0)) == doctest::Approx(RatioMax(v, 3.0).value));
  CHECK(RatioAtLogScale(v, -500.0) == doctest::Approx(0.0));
  CHECK(RatioAtLogScale(v, 500.0) == doctest::Approx(2.0));
  CHECK(SymmetricLogGap(-3) == doctest::Approx(-std::log(4.0)));
}

TEST_CASE("vector and curve text formats") {
  CHECK(ParseVector("1\n2.5\n# note\n-3\n") == std::vector<double>{1, 2.5, -3});
  CHECK(ParseVector("1,2, 3\n4") == std::vector<double>{1, 2, 3, 4});
  CHECK_THROWS_AS(ParseVector("1\nabc\n"), Error);
  CHECK_THROWS_AS(ParseVector("# only a comment\n"), Error);
  CHECK(FormatNumber(0.1) == "0.1");
  CHECK(FormatNumber(8) == "8");
  CHECK(FormatNumber(-0.0) == "0");
  CHECK(std::stod(FormatNumber(1.0 / 3)) == 1.0 / 3);

  const auto dir = std::filesystem::temp_directory_path();
  const std::string path = (dir / "smoothmax_io_test.txt").string();
  const std::vector<double> v{1.25, -7, 1e-300};
  WriteVectorFile(path, v);
  CHECK(ReadVectorFile(path) == v);

  const auto c = ParseCurveCsv("T,value\n0,1\n0.5,2\n1,4\n");
  CHECK(c.values == std::vector<double>{1, 2, 4});
  CHECK(ParseCurveCsv(FormatCurveCsv(c)).values == c.values);
  CHECK_THROWS_AS(ParseCurveCsv("t,v\n0,1\n1,2\n"), Error);
  CHECK_THROWS_AS(ReadVectorFile((dir / "smoothmax_missing_file").string()), Error);
}
