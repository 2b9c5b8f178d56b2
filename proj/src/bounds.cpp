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

#include "smoothmax/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "smoothmax/approx.hpp"
#include "smoothmax/error.hpp"

namespace smoothmax {
namespace {

const double kJustAboveOne = std::nextafter(1.0, 2.0);

void Validate(const BoundRequest& req) {
  Require(req.n >= 1, "n must be >= 1");
  Require(req.mu_max >= 1 && req.mu_max <= req.n, "mu_max must lie in [1, n]");
  Require(req.g2 > 0.0 && std::isfinite(req.g2), "g2 must be positive");
  Require(req.delta > 0.0, "delta must be positive");
}

// Least u >= 0 at which exp(u*step) - mu - rest*exp(-u*gap) turns positive.
// The expression is increasing in u, so bisection on a doubling bracket is
// exact up to the tolerance; the returned endpoint always satisfies it.
double PositiveCrossing(double step, double mu, double rest, double gap) {
  auto h = [&](double u) {
    return std::exp(u * step) - mu - rest * std::exp(-u * gap);
  };
  if (h(0.0) > 0.0) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (!(h(hi) > 0.0)) {
    lo = hi;
    hi *= 2.0;
    if (hi * step > 700.0) Fail(ErrorKind::kRange, "bound exceeds double range");
  }
  while (hi - lo > 1e-9 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > 0.0 ? hi : lo) = mid;
  }
  return hi;
}

std::int64_t CheckedInteger(double x) {
  if (std::abs(x) > 9007199254740992.0) {
    Fail(ErrorKind::kRange, "entry magnitude exceeds exact integer range");
  }
  return static_cast<std::int64_t>(x);
}

// L_v(t) by direct power-sum evaluation in extended precision, with no
// knowledge of the maximum.
long double DirectL(const RealVector& v, long double t) {
  const long double log_t = std::log(t);
  const long double budget = std::log(std::numeric_limits<long double>::max()) - 8.0L;
  for (double x : v.entries()) {
    if (std::abs(static_cast<long double>(x)) * log_t > budget) {
      Fail(ErrorKind::kRange,
           "entries too large for extended-precision power-sum evaluation");
    }
  }
  long double sum = 0.0L;
  for (double x : v.entries()) sum += std::pow(t, static_cast<long double>(x));
  return std::log(sum) / log_t;
}

}  // namespace

const char* TheoremName(Theorem t) {
  switch (t) {
    case Theorem::kL: return "L";
    case Theorem::kR: return "R";
    case Theorem::kD: return "D";
    case Theorem::kPNorm: return "PNORM";
  }
  return "?";
}

BoundResult BoundL(const BoundRequest& req) {
  Validate(req);
  const double n = static_cast<double>(req.n);
  const double mu = static_cast<double>(req.mu_max);
  BoundResult out;
  out.theorem = Theorem::kL;
  if (req.g2 >= 1.0 && req.delta == 1.0) {
    out.closed_form = true;
    out.t_min = std::max(kJustAboveOne, (mu + std::sqrt(mu * mu + 4.0 * (n - mu))) / 2.0);
    return out;
  }
  const double u = PositiveCrossing(req.delta, mu, n - mu, req.g2);
  out.t_min = std::max(kJustAboveOne, std::exp(u));
  return out;
}

BoundResult BoundR(const BoundRequest& req) {
  Validate(req);
  const double n = static_cast<double>(req.n);
  const double mu = static_cast<double>(req.mu_max);
  BoundResult out;
  out.theorem = Theorem::kR;
  out.closed_form = req.g2 >= 1.0 && req.delta == 1.0;
  const double tail = std::pow((n - mu) * req.g2 / (req.delta * mu), 1.0 / req.g2);
  out.t_min = std::max(std::exp(1.0 / req.g2), tail);
  return out;
}

BoundResult BoundD(const BoundRequest& req) {
  Validate(req);
  if (!req.alpha || !(*req.alpha > 1.0)) {
    Fail(ErrorKind::kInvalidArgument, "difference bound needs alpha > 1");
  }
  const double n = static_cast<double>(req.n);
  const double mu = static_cast<double>(req.mu_max);
  const double alpha = *req.alpha;
  const double shrink = std::pow(alpha, -req.g2);  // alpha^{-g2}
  BoundResult out;
  out.theorem = Theorem::kD;
  // The three-condition form is never looser than max(e, (n - mu) / mu), so it
  // is used for integral input too.
  const double peak = std::pow(alpha, shrink / (1.0 - shrink));
  const double tail = std::pow((n - mu) / (req.delta * mu) * (1.0 - shrink) / std::log(alpha),
                               1.0 / req.g2);
  out.t_min = std::max({std::exp(1.0 / req.g2), peak, tail});
  return out;
}

BoundResult BoundPNorm(const BoundRequest& req) {
  Validate(req);
  if (!req.m_upper || !(*req.m_upper > 0.0)) {
    Fail(ErrorKind::kInvalidArgument, "p-norm bound needs an upper estimate M > 0");
  }
  const double n = static_cast<double>(req.n);
  const double mu = static_cast<double>(req.mu_max);
  const double log_margin = std::log1p(req.delta / *req.m_upper);
  BoundResult out;
  out.theorem = Theorem::kPNorm;
  const double u = PositiveCrossing(log_margin, mu, n - mu, req.g2);
  out.t_min = std::max(kJustAboveOne, u);
  return out;
}

std::int64_t CertifiedMax(const RealVector& v) {
  if (!v.is_integral()) Fail(ErrorKind::kDomain, "certified maximum requires integral input");
  CheckedInteger(v.max());
  CheckedInteger(v.min());
  const long double t = static_cast<long double>(v.size()) + 1.0L;
  const long double L = DirectL(v, t);
  // L lies in [M, M + 1) with a margin of order 1/(n log n) below M + 1, so a
  // relative nudge far smaller than that margin absorbs rounding at L == M.
  const long double nudged = L + 1e-12L * std::max(1.0L, std::abs(L));
  return static_cast<std::int64_t>(std::floor(nudged));
}

MaxWithMultiplicity CertifiedMultiplicity(const RealVector& v) {
  MaxWithMultiplicity out;
  out.max = CertifiedMax(v);
  const long double t = static_cast<long double>(v.size()) + 1.0L;
  const long double L = DirectL(v, t);
  // t^{L - M} = mu + (sum of t^{-g}) lies in [mu, mu + 1) for t = n + 1.
  const long double scaled = std::pow(t, L - static_cast<long double>(out.max));
  out.multiplicity = static_cast<std::int64_t>(std::floor(scaled * (1.0L + 1e-12L)));
  return out;
}

namespace {

struct CombinedTerms {
  double num;    // 2 e1 e3 - e1 e2 - e2^2
  double den;    // e1 - 3 e2 + 2 e3
  double diff;   // e2 - e1
  double scale;  // |e1| + 3|e2| + 2|e3|
};

// With e_k = R^{(k)} - M, both combined formulas reduce to expressions in the
// offsets alone, which avoids cancelling against M.
CombinedTerms Combine(const RealVector& v, double t) {
  const auto e = HigherRatioOffsets(v, t, 3);
  CombinedTerms c;
  c.num = 2.0 * e[0] * e[2] - e[0] * e[1] - e[1] * e[1];
  c.den = e[0] - 3.0 * e[1] + 2.0 * e[2];
  c.diff = e[1] - e[0];
  c.scale = std::abs(e[0]) + 3.0 * std::abs(e[1]) + 2.0 * std::abs(e[2]);
  return c;
}

void CheckDenominator(double den, double scale) {
  if (den == 0.0 || !(std::abs(den) > 1e-12 * scale)) {
    Fail(ErrorKind::kNumerical, "combined formula denominator is degenerate");
  }
}

}  // namespace

double CombinedMax(const RealVector& v, double t) {
  const auto c = Combine(v, t);
  CheckDenominator(c.den, c.scale);
  return v.max() + c.num / c.den;
}

double CombinedGap(const RealVector& v, double t) {
  const auto c = Combine(v, t);
  CheckDenominator(c.den, c.scale);
  CheckDenominator(c.diff, c.scale);
  return c.den / c.diff;
}

SecondValueResult SecondValue(const RealVector& v) {
  if (!v.is_integral()) Fail(ErrorKind::kDomain, "second value requires integral input");
  SecondValueResult out;
  out.max = CertifiedMax(v);
  double t = std::max(std::numbers::e, static_cast<double>(v.size()));
  std::optional<long long> previous;
  for (int step = 0; step < 64; ++step, t *= 2.0) {
    const double gap = CombinedGap(v, t);
    const long long rounded = std::llround(gap);
    if (previous && *previous == rounded && rounded >= 1) {
      out.gap_estimate = gap;
      out.t = t;
      out.doublings = step;
      out.value = out.max - rounded;
      return out;
    }
    previous = rounded;
  }
  Fail(ErrorKind::kNumerical, "gap estimate did not stabilize");
}

std::vector<std::vector<Rational>> StirlingMatrix(int r) {
  Require(r >= 1 && r <= kMaxStirlingRank,
          "rank must be in [1, " + std::to_string(kMaxStirlingRank) + "]");
  // Integer Stirling numbers of the first kind via the falling factorial.
  std::vector<std::vector<std::int64_t>> s(r + 1, std::vector<std::int64_t>(r + 1, 0));
  s[0][0] = 1;
  for (int k = 0; k < r; ++k) {
    for (int j = 0; j <= k + 1; ++j) {
      const std::int64_t shifted = j > 0 ? s[k][j - 1] : 0;
      const std::int64_t same = j <= k ? s[k][j] : 0;
      s[k + 1][j] = shifted - static_cast<std::int64_t>(k) * same;
    }
  }
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r));
  std::int64_t factorial = 1;  // (i-1)!
  for (int i = 1; i <= r; ++i) {
    if (i > 1) factorial *= (i - 1);
    const std::int64_t sign = (i % 2 == 1) ? 1 : -1;
    for (int j = 1; j <= i; ++j) {
      std::int64_t num = sign * s[i][j];
      std::int64_t den = factorial;
      const std::int64_t g = std::gcd(num, den);
      if (g > 1) {
        num /= g;
        den /= g;
      }
      m[i - 1][j - 1] = Rational{num, den};
    }
  }
  return m;
}

}  // namespace smoothmax
