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
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "smoothmax/approx.hpp"
#include "smoothmax/error.hpp"
#include "smoothmax/vector.hpp"

using namespace smoothmax;

namespace {
const RealVector kV1{1, 2, 3, 4, 5, 6, 7};
const RealVector kV2{1, 2, 3, 4, 5, 6, 7, 7, 7, 7, 7};
}  // namespace

TEST_CASE("summarize reports distinct values, multiplicities and gaps") {
  const auto s = Summarize(RealVector{7, 7, -1, 0, 1, 1, 2.5, 2.5, 7, 7});
  CHECK(s.max == 7);
  CHECK(s.min == -1);
  CHECK(s.distinct == std::vector<double>{7, 2.5, 1, 0, -1});
  CHECK(s.multiplicity == std::vector<std::size_t>{4, 2, 2, 1, 1});
  CHECK(s.gaps == std::vector<double>{0, 4.5, 6, 7, 8});
  CHECK(s.second_gap() == 4.5);

  const auto one = Summarize(RealVector{5});
  CHECK(one.distinct_count() == 1);
  CHECK(one.min == 5);
  CHECK(one.gaps == std::vector<double>{0});

  const auto flat = Summarize(RealVector{3, 3, 3});
  CHECK(flat.distinct_count() == 1);
  CHECK(flat.max_multiplicity() == 3);
}

TEST_CASE("summarize agrees with a sorting oracle") {
  std::mt19937_64 g(7);
  for (int rep = 0; rep < 200; ++rep) {
    const auto v = oracle::RandomIntegral(g, 1 + g() % 40, -10, 10);
    const auto s = Summarize(RealVector(v));
    const auto c = oracle::Count(v);
    REQUIRE(s.distinct == c.distinct);
    for (std::size_t i = 0; i < s.distinct.size(); ++i) {
      CHECK(s.multiplicity[i] == c.multiplicity.at(s.distinct[i]));
    }
  }
}

TEST_CASE("vectors reject empty and non-finite input") {
  CHECK_THROWS_AS(RealVector(std::vector<double>{}), Error);
  CHECK_THROWS_AS(RealVector({1.0, NAN}), Error);
  CHECK_THROWS_AS(RealVector({1.0, INFINITY}), Error);
  CHECK(RealVector{1, 2}.is_integral());
  CHECK_FALSE(RealVector{1, 2.5}.is_integral());
}

TEST_CASE("log power sum") {
  CHECK(LogPowerSum(RealVector{0}, 3.0) == doctest::Approx(0.0));
  CHECK(LogPowerSum(RealVector{2, 2, 2}, 1.5) == doctest::Approx(3.0 + std::log(3.0)));
  const double u = std::log(4.0);
  const long double ref = oracle::LogSumDirect({1, 2, 3, 4, 5, 6, 7}, 4.0L) * std::log(4.0L);
  CHECK(std::fabs(LogPowerSum(kV1, u) - static_cast<double>(ref)) < 1e-12);
  // Large scales stay finite.
  CHECK(std::isfinite(LogPowerSum(RealVector{1000, -1000}, 50.0)));
}

TEST_CASE("log-sum-exp maximum") {
  for (double t : {3.01, 3.2, 5.0, 100.0}) {
    const double l = LogSumExpMax(kV1, t).value;
    CHECK(l >= 7);
    CHECK(l < 8);
  }
  CHECK(LogSumExpMax(RealVector{2, 2}, 2).value == doctest::Approx(3.0));
  CHECK(LogSumExpMax(RealVector{0, 1}, std::numbers::e).value ==
        doctest::Approx(std::log1p(std::numbers::e)));
  CHECK_THROWS_AS(LogSumExpMax(kV1, 1.0), Error);
  CHECK_THROWS_AS(LogSumExpMax(kV1, 0.5), Error);
}

TEST_CASE("ratio maximum") {
  CHECK(RatioMax(RealVector{4, 4, 4}, 9.0).value == doctest::Approx(4.0));
  const double e = std::numbers::e;
  CHECK(RatioMax(RealVector{0, 1}, e).value == doctest::Approx(e / (1 + e)));
  for (double t : {2.72, 3.0, 10.0, 1e4}) {
    const double r = RatioMax(kV2, t).value;
    CHECK(r > 6);
    CHECK(r <= 7);
  }
  std::mt19937_64 g(11);
  for (int rep = 0; rep < 50; ++rep) {
    const auto v = oracle::RandomIntegral(g, 2 + g() % 20, -5, 5);
    const double t = 1.5 + (g() % 100) / 10.0;
    CHECK(RatioMax(RealVector(v), t).value ==
          doctest::Approx(static_cast<double>(oracle::RatioDirect(v, t))).epsilon(1e-12));
  }
}

TEST_CASE("higher-order ratio") {
  std::mt19937_64 g(5);
  for (int rep = 0; rep < 20; ++rep) {
    const RealVector v(oracle::RandomIntegral(g, 2 + g() % 10, -4, 4));
    const double t = 1.5 + (g() % 50) / 10.0;
    CHECK(HigherRatioMax(v, t, 1).value == doctest::Approx(RatioMax(v, t).value).epsilon(1e-13));
  }
  for (int k = 1; k <= kMaxRatioOrder; ++k) {
    CHECK(HigherRatioMax(RealVector{2.5, 2.5}, 3.0, k).value == doctest::Approx(2.5));
  }
  const double e = std::numbers::e;
  const double sigma = e / (1 + e);
  CHECK(HigherRatioMax(RealVector{0, 1}, e, 2).value ==
        doctest::Approx(1.0 / ((1 + 1 / e) * (1 + 1 / e))));
  CHECK(HigherRatioMax(RealVector{0, 1}, e, 2).value ==
        doctest::Approx(sigma - sigma * (1 - sigma)));
  CHECK_THROWS_AS(HigherRatioMax(kV1, 2.0, 0), Error);
  CHECK_THROWS_AS(HigherRatioMax(kV1, 2.0, kMaxRatioOrder + 1), Error);
}

TEST_CASE("log derivatives match finite differences") {
  const std::vector<double> v{0, 1, 3, 3, 4};
  const RealVector rv(v);
  const double t = 2.0;
  const auto d = LogDerivatives(rv, t, 3);
  // d[k-1] is the k-th derivative of log F(e^u) in u.
  auto f = [&](long double u) {
    long double s = 0;
    for (double x : v) s += std::exp(x * u);
    return std::log(s);
  };
  const long double u = std::log(2.0L);
  CHECK(d[0] == doctest::Approx(oracle::CentralDifference(f, u, 1, 1e-4L)).epsilon(1e-7));
  CHECK(d[1] == doctest::Approx(oracle::CentralDifference(f, u, 2, 1e-3L)).epsilon(1e-5));
  CHECK(d[2] == doctest::Approx(oracle::CentralDifference(f, u, 3, 1e-2L)).epsilon(1e-3));
}

TEST_CASE("difference maximum") {
  CHECK(DifferenceMax(RealVector{-3, -3}, 2.0, 1.5).value == doctest::Approx(-3.0));
  std::mt19937_64 g(3);
  for (int rep = 0; rep < 30; ++rep) {
    const auto v = oracle::RandomIntegral(g, 2 + g() % 10, -5, 5);
    const double t = 1.5 + (g() % 30) / 10.0;
    CHECK(DifferenceMax(RealVector(v), t, 2.0).value ==
          doctest::Approx(static_cast<double>(oracle::DifferenceDirect(v, t, 2.0L))).epsilon(1e-12));
    // Approaches the ratio linearly as alpha tends to 1.
    const double r = RatioMax(RealVector(v), t).value;
    const double e2 = std::fabs(DifferenceMax(RealVector(v), t, 1 + 1e-2).value - r);
    const double e4 = std::fabs(DifferenceMax(RealVector(v), t, 1 + 1e-4).value - r);
    CHECK(e4 <= e2 * 0.02 + 1e-10);
  }
  CHECK_THROWS_AS(DifferenceMax(kV1, 2.0, 1.0), Error);
}

TEST_CASE("p-norm") {
  CHECK(PNormMax(RealVector{1, 0, 0}, 3.0).value == doctest::Approx(1.0));
  CHECK(PNormMax(RealVector{3, 4}, 2.0).value == doctest::Approx(5.0));
  std::vector<double> w;
  for (int i = 1; i <= 7; ++i) w.push_back(i / 7.0);
  const double n = PNormMax(RealVector(w), 50.0).value;
  CHECK(std::fabs(n - 1.0) < 0.1);
  CHECK(n == doctest::Approx(static_cast<double>(oracle::PNormDirect(w, 50.0L))));
  CHECK(PNormMax(RealVector{0, 0}, 2.0).value == 0.0);
  CHECK_THROWS_AS(PNormMax(RealVector{-1, 2}, 2.0), Error);
  CHECK_THROWS_AS(PNormMax(RealVector{1, 2}, 0.0), Error);
}

TEST_CASE("contour estimator") {
  CHECK(std::fabs(ContourMax(kV1, 1, 0.1, 64) - 7) < 1e-6);
  CHECK(std::fabs(ContourMax(kV2, 1, 0.1, 64) - 7) < 1e-6);
  CHECK(ContourMax(RealVector{2, 2, 2}, 1, 0.1, 8) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ContourMax(RealVector{2, 2, 2}, 3, 0.1, 8) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(ContourMax(kV1, 1, 0.1, 2), Error);
  CHECK_THROWS_AS(ContourMax(kV1, 1, 0.0, 64), Error);
}

TEST_CASE("signed Stirling numbers of the first kind") {
  const auto s = SignedStirlingFirstKind(4);
  CHECK(s[4][1] == -6);
  CHECK(s[4][2] == 11);
  CHECK(s[4][3] == -6);
  CHECK(s[4][4] == 1);
  CHECK(s[3][1] == 2);
}
