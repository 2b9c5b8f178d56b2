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

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "smoothmax/applications.hpp"
#include "smoothmax/error.hpp"

using namespace smoothmax;

namespace {

double Sextic(double x) {
  double acc = 0;
  for (auto it = kServiceInputCoefficients.rbegin(); it != kServiceInputCoefficients.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

}  // namespace

TEST_CASE("consecutive subsums") {
  const std::vector<double> v{1, 4, 2, 3, 8, 1, 1, 5, 6, 7, 5};
  const auto r = Mcsp(v);
  CHECK(r.certified);
  CHECK(r.sums == std::vector<double>{8, 13, 18, 23, 24, 28, 33, 36, 38, 42, 43});
  McspOptions no_full;
  no_full.include_full_sum = false;
  CHECK(Mcsp(v, no_full).sums.size() == 10);
  CHECK(Mcsp(std::vector<double>{5}).sums == std::vector<double>{5});

  std::mt19937_64 g(12);
  for (int rep = 0; rep < 20; ++rep) {
    const auto iv = oracle::RandomIntegral(g, 1 + g() % 40, -10, 10);
    CHECK(Mcsp(iv).sums == oracle::SlidingWindowMaxima(iv));
  }
  std::uniform_real_distribution<double> u(0, 1);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<double> fv(50);
    for (auto& x : fv) x = u(g);
    const auto res = Mcsp(fv);
    const auto ref = oracle::SlidingWindowMaxima(fv);
    REQUIRE(res.sums.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(std::fabs(res.sums[i] - ref[i]) <= res.error[i] + 1e-12);
      CHECK(res.error[i] < 2e-2);
      CHECK(res.sums[i] >= ref[i] - 1e-9);
    }
  }
  CHECK_THROWS_AS(Mcsp(std::vector<double>{}), Error);
}

TEST_CASE("polynomial discretization") {
  const std::vector<double> one{1};
  CHECK(Discretize(one, 2, 3).values == std::vector<double>{1, 1, 1});
  const std::vector<double> id{0, 1};
  const auto g = Discretize(id, 4, 5);
  CHECK(g.values == std::vector<double>{0, 1, 2, 3, 4});
  CHECK(g.times == std::vector<double>{0, 1, 2, 3, 4});
  CHECK(g.monotone);
  const auto s = Discretize(kServiceInputCoefficients, kServiceHorizon, 11);
  CHECK(s.values[0] == 0.0);
  CHECK(s.values[5] == doctest::Approx(Sextic(5.0)));
  CHECK_THROWS_AS(MakeCurveGrid({0, 1, 3}, {0, 0, 0}), Error);
  CHECK_THROWS_AS(MakeCurveGrid({1, 2}, {0, 0}), Error);
  CHECK_THROWS_AS(Discretize(std::vector<double>{}, 1, 3), Error);
}

TEST_CASE("service-curve bounds match brute-force min-plus") {
  for (std::size_t n : {10u, 100u}) {
    const auto r = SampleCurve(Sextic, kServiceHorizon, n);
    const auto beta = SampleCurve([](double x) { return x; }, kServiceHorizon, n);
    const auto gamma =
        SampleCurve([](double x) { return std::max(0.0, x - kServiceDelay); }, kServiceHorizon, n);
    const auto b = ComputeServiceBounds(r, beta, gamma);
    const auto lo = oracle::MinPlus(r.values, beta.values);
    const auto hi = oracle::MinPlus(r.values, gamma.values);
    CHECK(b.lower.values[0] == r.values[0]);
    for (std::size_t k = 0; k < n; ++k) {
      const double el = b.lower.values[k] - lo[k], eh = b.upper.values[k] - hi[k];
      CHECK(el >= -1e-9);
      CHECK(eh >= -1e-9);
      CHECK(el <= 1e-2);
      CHECK(eh <= 1e-2);
    }
  }
}

TEST_CASE("service bounds with a constant input") {
  const auto r = SampleCurve([](double) { return 2.0; }, 5, 20);
  const auto beta = SampleCurve([](double x) { return std::sin(x) + 1; }, 5, 20);
  const auto b = ComputeServiceBounds(r, beta, beta);
  double running = beta.values[0];
  for (std::size_t k = 0; k < 20; ++k) {
    running = std::min(running, beta.values[k]);
    CHECK(b.lower.values[k] == doctest::Approx(2.0 + running).epsilon(5e-3));
    CHECK(b.lower.values[k] >= 2.0 + running - 1e-9);
  }
  ServiceOptions bad;
  bad.t = 2.0;
  CHECK_THROWS_AS(ComputeServiceBounds(r, beta, beta, bad), Error);
  const auto other = SampleCurve([](double) { return 0.0; }, 6, 20);
  CHECK_THROWS_AS(ComputeServiceBounds(r, other, beta), Error);
}

TEST_CASE("real-valued subsum error shrinks as t grows") {
  std::mt19937_64 g(100);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> v(100);
  for (auto& x : v) x = u(g);
  const auto ref = oracle::SlidingWindowMaxima(v);
  double previous = INFINITY;
  for (double t : {1e2, 1e4, 1e8, 1e16, 1e32}) {
    McspOptions o;
    o.t = t;
    const auto r = Mcsp(v, o);
    double worst = 0;
    for (std::size_t i = 0; i < ref.size(); ++i) worst = std::max(worst, std::fabs(r.sums[i] - ref[i]));
    CHECK(worst < previous);
    previous = worst;
  }
  CHECK(previous < 0.05);
}
