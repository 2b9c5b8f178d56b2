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
#include "smoothmax/bounds.hpp"
#include "smoothmax/error.hpp"
#include "smoothmax/vector.hpp"

using namespace smoothmax;

namespace {
const RealVector kV1{1, 2, 3, 4, 5, 6, 7};
const RealVector kV2{1, 2, 3, 4, 5, 6, 7, 7, 7, 7, 7};

BoundRequest Req(std::size_t n, std::size_t mu, double g2 = 1, double delta = 1) {
  BoundRequest r;
  r.n = n;
  r.mu_max = mu;
  r.g2 = g2;
  r.delta = delta;
  return r;
}
}  // namespace

TEST_CASE("log-sum-exp bound") {
  const auto b7 = BoundL(Req(7, 1));
  CHECK(b7.closed_form);
  CHECK(b7.t_min == doctest::Approx(3.0));
  // The simplified form for a unique maximum is never tighter than the exact one.
  for (std::size_t n = 1; n <= 200; ++n) {
    CHECK(BoundL(Req(n, 1)).t_min <= 0.5 + std::sqrt(double(n)) + 1e-12);
  }
  CHECK(BoundL(Req(11, 5)).t_min == doctest::Approx(6.0));
  CHECK(BoundL(Req(1, 1)).t_min < 1.0 + 1e-6);
  CHECK(BoundL(Req(1, 1, 1, 0.01)).t_min < 1.0 + 1e-6);
  // Bisection branch satisfies the inequality just past the threshold.
  const auto r = Req(20, 2, 0.5, 0.3);
  const double t = BoundL(r).t_min;
  CHECK_FALSE(BoundL(r).closed_form);
  auto h = [&](double x) {
    return std::pow(x, r.delta + r.g2) - std::pow(x, r.g2) * r.mu_max - double(r.n - r.mu_max);
  };
  CHECK(h(t * (1 + 1e-6)) > 0);
  CHECK(h(t * (1 - 1e-3)) < 0);
  CHECK_THROWS_AS(BoundL(Req(3, 4)), Error);
  CHECK_THROWS_AS(BoundL(Req(3, 1, 0.0)), Error);
}

TEST_CASE("ratio bound") {
  CHECK(BoundR(Req(11, 5)).t_min == doctest::Approx(std::numbers::e));
  CHECK(BoundR(Req(100, 1)).t_min == doctest::Approx(99.0));
  CHECK(BoundR(Req(6, 6, 0.5)).t_min == doctest::Approx(std::exp(2.0)));
}

TEST_CASE("difference bound") {
  BoundRequest r = Req(11, 5);
  r.alpha = std::numbers::e;
  CHECK(BoundD(r).t_min == doctest::Approx(std::numbers::e));
  // Approaches the ratio bound as alpha tends to 1.
  BoundRequest near = Req(40, 1, 1, 0.5);
  near.alpha = 1 + 1e-7;
  CHECK(BoundD(near).t_min == doctest::Approx(BoundR(near).t_min).epsilon(1e-5));
  // Worst case vector (M, M-1, M-1, M-1) reaches |M - D| < 1 at the bound.
  BoundRequest four = Req(4, 1);
  four.alpha = 1.05;
  const double t = BoundD(four).t_min;
  const double expected = std::max(
      {std::numbers::e, std::pow(1.05, (1 / 1.05) / (1 - 1 / 1.05)), 3 * (1 - 1 / 1.05) / std::log(1.05)});
  CHECK(t == doctest::Approx(expected));
  const RealVector worst{9, 8, 8, 8};
  CHECK(9 - DifferenceMax(worst, t * (1 + 1e-9), 1.05).value < 1);
  BoundRequest bad = Req(4, 1);
  CHECK_THROWS_AS(BoundD(bad), Error);
  bad.alpha = 1.0;
  CHECK_THROWS_AS(BoundD(bad), Error);
}

TEST_CASE("p-norm bound") {
  BoundRequest r = Req(7, 1, 1.0 / 7, 0.1);
  r.m_upper = 1.0;
  const double u = BoundPNorm(r).t_min;
  std::vector<double> w;
  for (int i = 1; i <= 7; ++i) w.push_back(i / 7.0);
  CHECK(oracle::PNormDirect(w, u * (1 + 1e-9)) - 1 < 0.1);
  r.delta = 1e9;
  CHECK(BoundPNorm(r).t_min <= 1.0 + 1e-9);
  r.m_upper.reset();
  CHECK_THROWS_AS(BoundPNorm(r), Error);
}

TEST_CASE("certified maximum and multiplicity") {
  CHECK(CertifiedMax(kV1) == 7);
  CHECK(CertifiedMax(RealVector{-4, -4}) == -4);
  CHECK(CertifiedMultiplicity(kV2).multiplicity == 5);
  CHECK(CertifiedMultiplicity(RealVector{2, 2, 2, 2}).multiplicity == 4);
  std::mt19937_64 g(99);
  for (int rep = 0; rep < 1000; ++rep) {
    const auto v = oracle::RandomIntegral(g, 1 + g() % 64, -50, 50);
    const auto c = oracle::Count(v);
    const auto m = CertifiedMultiplicity(RealVector(v));
    REQUIRE(m.max == c.max);
    REQUIRE(std::size_t(m.multiplicity) == c.mu);
  }
  CHECK_THROWS_AS(CertifiedMax(RealVector{1.5, 2}), Error);
}

TEST_CASE("combined higher-order formulas") {
  CHECK(std::fabs(CombinedMax(kV1, 10) - 7) < std::fabs(RatioMax(kV1, 10).value - 7));
  CHECK(std::fabs(CombinedMax(kV1, 100) - 7) < 1e-3);
  CHECK(std::fabs(CombinedGap(kV1, 100) - 1) < 0.05);
  CHECK(std::fabs(CombinedGap(kV2, 100) - 1) < 0.05);
  CHECK(CombinedGap(RealVector{0, 5}, 50) == doctest::Approx(5.0).epsilon(1e-6));
  CHECK_THROWS_AS(CombinedMax(RealVector{3, 3}, 10), Error);
  CHECK_THROWS_AS(CombinedGap(RealVector{3, 3, 3}, 10), Error);
  // The error ratio to the ratio approximation shrinks as t doubles.
  std::mt19937_64 g(21);
  int checked = 0;
  while (checked < 20) {
    const auto v = oracle::RandomIntegral(g, 5 + g() % 10, 0, 6);
    if (oracle::Count(v).distinct.size() < 3) continue;
    const RealVector rv(v);
    const double m = rv.max();
    auto ratio = [&](double t) {
      return std::fabs(m - CombinedMax(rv, t)) / std::fabs(m - RatioMax(rv, t).value);
    };
    CHECK(ratio(80) < ratio(20));
    ++checked;
  }
}

TEST_CASE("second largest value") {
  CHECK(SecondValue(kV1).value == 6);
  CHECK(SecondValue(RealVector{0, 5}).value == 0);
  std::mt19937_64 g(8);
  int checked = 0;
  while (checked < 100) {
    const auto v = oracle::RandomIntegral(g, 2 + g() % 30, -20, 20);
    const auto c = oracle::Count(v);
    if (c.distinct.size() < 2) continue;
    CHECK(SecondValue(RealVector(v)).value == c.distinct[1]);
    ++checked;
  }
}

TEST_CASE("Stirling change of basis") {
  CHECK(StirlingMatrix(1)[0][0] == Rational{1, 1});
  const auto a3 = StirlingMatrix(3);
  CHECK(a3[2][0].to_double() == doctest::Approx(1.0));
  CHECK(a3[2][1].to_double() == doctest::Approx(-1.5));
  CHECK(a3[2][2].to_double() == doctest::Approx(0.5));
  const auto a4 = StirlingMatrix(4);
  CHECK(a4[1][0].to_double() == doctest::Approx(1.0));
  CHECK(a4[1][1].to_double() == doctest::Approx(-1.0));
  const std::vector<double> row4{1, -11.0 / 6, 1, -1.0 / 6};
  for (int j = 0; j < 4; ++j) CHECK(a4[3][j].to_double() == doctest::Approx(row4[j]));
  // Rows applied to the derivative vector reproduce the higher-order ratios.
  const RealVector v{0, 1, 1, 4, 6};
  for (double t : {1.7, 3.0, 8.0}) {
    const auto d = LogDerivatives(v, t, 6);
    const auto a = StirlingMatrix(6);
    for (int k = 1; k <= 6; ++k) {
      double s = 0;
      for (int j = 0; j < k; ++j) s += a[k - 1][j].to_double() * d[j];
      CHECK(std::fabs(s - HigherRatioMax(v, t, k).value) < 1e-8);
    }
  }
  CHECK_THROWS_AS(StirlingMatrix(0), Error);
}
