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

#include "smoothmax/maxconv.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include "smoothmax/bounds.hpp"
#include "smoothmax/error.hpp"

namespace smoothmax {
namespace {

constexpr double kU = std::numeric_limits<double>::epsilon() / 2.0;
// Largest exact operand, in bits, before AUTO gives up on big integers.
constexpr double kExactBitBudget = double(std::size_t{1} << 28);

// Rough per-unit costs used to choose between the two audit fallbacks.
constexpr double kExactCostPerBit = 2e-10;   // seconds per bit * log2(bits)
constexpr double kDirectCostPerTerm = 5e-9;  // seconds per exp-and-add

struct Sums {
  std::vector<double> log_sum;  // log sum_{i+j=k} exp(za_i + zb_j)
  std::vector<double> log_err;
  Backend backend = Backend::kFftFloat;
  std::size_t patched = 0;
  double fft_bound = 0.0;
  std::vector<mpz_class> exact;
  double exact_offset = 0.0;
};

bool AllIntegral(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == std::floor(x); });
}

void CheckInput(std::span<const double> v) {
  Require(!v.empty(), "max-convolution inputs must be nonempty");
  for (double x : v) Require(std::isfinite(x), "max-convolution inputs must be finite");
}

std::vector<double> Exponents(std::span<const double> v, double log_t) {
  const double top = *std::max_element(v.begin(), v.end());
  std::vector<double> z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) z[i] = (v[i] - top) * log_t;
  for (double x : z) {
    if (!std::isfinite(x)) Fail(ErrorKind::kRange, "t to the input range overflows");
  }
  return z;
}

double Spread(std::span<const double> z) {
  return -*std::min_element(z.begin(), z.end());
}

// Relative error of exp(z) when z itself carries a rounding error.
double InputError(std::span<const double> za, std::span<const double> zb) {
  return 2.0 * kU * (Spread(za) + Spread(zb) + 4.0);
}

std::pair<std::size_t, std::size_t> Span(std::size_t k, std::size_t n, std::size_t m) {
  const std::size_t lo = k >= m ? k - m + 1 : 0;
  return {lo, std::min(k, n - 1)};
}

double DirectLogSum(std::span<const double> za, std::span<const double> zb, std::size_t k,
                    double& err) {
  const auto [lo, hi] = Span(k, za.size(), zb.size());
  double top = -INFINITY;
  for (std::size_t i = lo; i <= hi; ++i) top = std::max(top, za[i] + zb[k - i]);
  double acc = 0.0;
  for (std::size_t i = lo; i <= hi; ++i) acc += std::exp(za[i] + zb[k - i] - top);
  const double out = top + std::log(acc);
  err = (static_cast<double>(hi - lo) + 4.0) * kU * (1.0 + std::abs(out)) +
        2.0 * kU * std::abs(top);
  return out;
}

Sums FftSums(std::span<const double> za, std::span<const double> zb, double in_err) {
  std::vector<double> x(za.size()), y(zb.size());
  std::transform(za.begin(), za.end(), x.begin(), [](double z) { return std::exp(z); });
  std::transform(zb.begin(), zb.end(), y.begin(), [](double z) { return std::exp(z); });
  const Convolution conv = Convolve(x, y, Backend::kFftFloat);
  Sums s;
  s.backend = Backend::kFftFloat;
  // Underflowed terms are dropped; their total mass is below this.
  const double lost = static_cast<double>(x.size() + y.size()) * 1e-300;
  s.fft_bound = conv.error.empty() ? 0.0 : conv.error.front() + lost;
  s.log_sum.resize(conv.values.size());
  s.log_err.resize(conv.values.size());
  for (std::size_t k = 0; k < conv.values.size(); ++k) {
    const double v = conv.values[k];
    if (!(v > s.fft_bound)) {
      s.log_sum[k] = std::log(std::max(v, std::numeric_limits<double>::min()));
      s.log_err[k] = INFINITY;
      continue;
    }
    s.log_sum[k] = std::log(v);
    s.log_err[k] = -std::log1p(-s.fft_bound / v) + in_err + 2.0 * kU * std::abs(s.log_sum[k]);
  }
  return s;
}

bool IntegerBase(double t) { return t == std::floor(t) && t >= 2.0 && t < 2147483648.0; }

// Operand size, in bits, of the big-integer product ExactSums would form.
double ExactBits(std::span<const double> a, std::span<const double> b,
                 std::span<const double> za, std::span<const double> zb, double t) {
  const double width = double(std::bit_width(std::min(a.size(), b.size()))) + 2.0;
  double slot = 0.0;
  if (IntegerBase(t) && AllIntegral(a) && AllIntegral(b)) {
    slot = (Spread(za) + Spread(zb)) / std::numbers::ln2 + width;
  } else {
    slot = (Spread(za) + Spread(zb)) / std::numbers::ln2 + 128.0 + width;
  }
  return slot * double(a.size() + b.size());
}

// Integer powers t^(v_i - min v) when t is an integer; otherwise fixed point
// with enough fraction bits that no term loses relative precision.
std::optional<Sums> ExactSums(std::span<const double> a, std::span<const double> b,
                              std::span<const double> za, std::span<const double> zb,
                              double t, double log_t, double in_err) {
  const std::size_t out_len = a.size() + b.size() - 1;
  const double width = double(std::bit_width(std::min(a.size(), b.size()))) + 2.0;
  Sums s;
  s.backend = Backend::kExactInt;
  s.log_sum.resize(out_len);
  s.log_err.resize(out_len);

  if (IntegerBase(t) && AllIntegral(a) && AllIntegral(b)) {
    const double min_a = *std::min_element(a.begin(), a.end());
    const double min_b = *std::min_element(b.begin(), b.end());
    const double range_a = *std::max_element(a.begin(), a.end()) - min_a;
    const double range_b = *std::max_element(b.begin(), b.end()) - min_b;
    const double slot = (range_a + range_b) * std::log2(t) + width;
    if (slot * double(a.size() + b.size()) > kExactBitBudget) return std::nullopt;
    const auto base = static_cast<unsigned long>(t);
    auto powers = [base](std::span<const double> v, double lo) {
      std::vector<mpz_class> p(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_ui_pow_ui(p[i].get_mpz_t(), base, static_cast<unsigned long>(v[i] - lo));
      }
      return p;
    };
    s.exact = ConvolveExact(powers(a, min_a), powers(b, min_b));
    s.exact_offset = min_a + min_b;
    // Shift back so that log_sum refers to exponents relative to max(a) + max(b).
    const double shift = -(range_a + range_b) * log_t;
    for (std::size_t k = 0; k < out_len; ++k) {
      const double lg = LogOf(s.exact[k]);
      s.log_sum[k] = lg + shift;
      s.log_err[k] = 4.0 * kU * (std::abs(lg) + std::abs(shift) + 1.0);
    }
    return s;
  }

  const auto bits = [](std::span<const double> z) {
    return static_cast<long>(std::ceil(Spread(z) / std::numbers::ln2)) + 64;
  };
  const long ka = bits(za), kb = bits(zb);
  if ((double(ka + kb) + width) * double(a.size() + b.size()) > kExactBitBudget) {
    return std::nullopt;
  }
  auto fixed = [](std::span<const double> z, long k) {
    std::vector<mpz_class> p(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      const double q = z[i] / std::numbers::ln2;
      const double e = std::floor(q);
      const double mantissa = std::exp2(q - e) * 4503599627370496.0;  // 2^52, exact integer
      mpz_set_d(p[i].get_mpz_t(), std::floor(mantissa));
      const long shift = k + static_cast<long>(e) - 52;  // >= 11 by the choice of k
      mpz_mul_2exp(p[i].get_mpz_t(), p[i].get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    }
    return p;
  };
  const auto product = ConvolveExact(fixed(za, ka), fixed(zb, kb));
  const double scale = double(ka + kb) * std::numbers::ln2;
  for (std::size_t k = 0; k < out_len; ++k) {
    const double lg = LogOf(product[k]);
    s.log_sum[k] = lg - scale;
    s.log_err[k] = in_err + 0x1p-58 + 4.0 * kU * (std::abs(lg) + scale + 1.0);
  }
  return s;
}

Sums DirectSums(std::span<const double> za, std::span<const double> zb, double in_err) {
  const std::size_t out_len = za.size() + zb.size() - 1;
  Sums s;
  s.backend = Backend::kDirect;
  s.log_sum.resize(out_len);
  s.log_err.resize(out_len);
  for (std::size_t k = 0; k < out_len; ++k) {
    double err = 0.0;
    s.log_sum[k] = DirectLogSum(za, zb, k, err);
    s.log_err[k] = err + in_err;
  }
  return s;
}

// Shifted log power sums at base t, audited against `tol` (absolute, in log
// space). AUTO: FFT, then exact integers if affordable, else direct
// recomputation of the coefficients that failed the audit.
Sums PowerSums(std::span<const double> a, std::span<const double> b, double t,
               BackendChoice choice, double tol, bool prefer_exact) {
  const double log_t = std::log(t);
  const auto za = Exponents(a, log_t);
  const auto zb = Exponents(b, log_t);
  const double in_err = InputError(za, zb);
  switch (choice) {
    case BackendChoice::kDirect:
      return DirectSums(za, zb, in_err);
    case BackendChoice::kExactInt: {
      auto s = ExactSums(a, b, za, zb, t, log_t, in_err);
      if (!s) Fail(ErrorKind::kRange, "exact backend exceeds the big-integer budget");
      return *s;
    }
    case BackendChoice::kFftFloat:
      return FftSums(za, zb, in_err);
    case BackendChoice::kAuto:
      break;
  }
  Sums s = FftSums(za, zb, in_err);
  std::vector<std::size_t> failing;
  for (std::size_t k = 0; k < s.log_err.size(); ++k) {
    if (!(s.log_err[k] <= tol)) failing.push_back(k);
  }
  if (failing.empty()) return s;
  // Integer recovery retries on big integers when the budget allows. The
  // real-valued path takes whichever fallback is estimated to be cheaper.
  bool try_exact = prefer_exact;
  if (!prefer_exact) {
    double terms = 0.0;
    for (std::size_t k : failing) {
      const auto [lo, hi] = Span(k, za.size(), zb.size());
      terms += static_cast<double>(hi - lo + 1);
    }
    const double bits = ExactBits(a, b, za, zb, t);
    try_exact = bits * std::log2(bits + 2.0) * kExactCostPerBit < terms * kDirectCostPerTerm;
  }
  if (!try_exact) {
    // fall through to direct patching
  } else if (auto exact = ExactSums(a, b, za, zb, t, log_t, in_err)) {
    exact->fft_bound = s.fft_bound;
    return *std::move(exact);
  }
  for (std::size_t k : failing) {
    double err = 0.0;
    s.log_sum[k] = DirectLogSum(za, zb, k, err);
    s.log_err[k] = err + in_err;
  }
  s.patched = failing.size();
  return s;
}

std::pair<Sums, Sums> PowerSumPair(std::span<const double> a, std::span<const double> b,
                                   double t, double alpha, BackendChoice choice, double tol,
                                   bool prefer_exact) {
  auto scaled = std::async(std::launch::async,
                           [&] { return PowerSums(a, b, alpha * t, choice, tol, prefer_exact); });
  Sums base = PowerSums(a, b, t, choice, tol, prefer_exact);
  return {std::move(base), scaled.get()};
}

// Smooth values r_k and their error bounds.
struct Smooth {
  std::vector<double> r, err;
  Sums base;
  std::optional<Sums> scaled;
};

Smooth Evaluate(std::span<const double> a, std::span<const double> b, ConvAlgorithm algorithm,
                double t, std::optional<double> alpha, BackendChoice choice, double tol,
                bool prefer_exact) {
  const double top = *std::max_element(a.begin(), a.end()) + *std::max_element(b.begin(), b.end());
  Smooth out;
  if (algorithm == ConvAlgorithm::kLogSumExp) {
    out.base = PowerSums(a, b, t, choice, tol, prefer_exact);
    const double log_t = std::log(t);
    for (std::size_t k = 0; k < out.base.log_sum.size(); ++k) {
      const double r = top + out.base.log_sum[k] / log_t;
      out.r.push_back(r);
      out.err.push_back(out.base.log_err[k] / log_t + 4.0 * kU * (std::abs(r) + 1.0));
    }
    return out;
  }
  const double log_alpha = std::log(*alpha);
  auto [base, scaled] = PowerSumPair(a, b, t, *alpha, choice, tol, prefer_exact);
  for (std::size_t k = 0; k < base.log_sum.size(); ++k) {
    // Both sums are shifted by the same max(a) + max(b), which scaling by
    // alpha turns into a log(alpha) * top term.
    const double r = top + (scaled.log_sum[k] - base.log_sum[k]) / log_alpha;
    out.r.push_back(r);
    out.err.push_back((scaled.log_err[k] + base.log_err[k]) / std::abs(log_alpha) +
                      4.0 * kU * (std::abs(r) + 1.0));
  }
  out.base = std::move(base);
  out.scaled = std::move(scaled);
  return out;
}

ConvolutionPlan MakePlan(const Smooth& s, double t, std::optional<double> alpha, Rounding r) {
  ConvolutionPlan plan;
  plan.backend = s.base.backend;
  plan.t_star = t;
  plan.alpha_star = alpha;
  plan.rounding = r;
  plan.fft_error_bound = s.base.fft_bound;
  plan.patched = s.base.patched;
  if (s.scaled) {
    plan.fft_error_bound = std::max(plan.fft_error_bound, s.scaled->fft_bound);
    plan.patched += s.scaled->patched;
    if (s.scaled->backend == Backend::kExactInt) plan.backend = Backend::kExactInt;
  }
  return plan;
}

// Distance the smooth value keeps from the far edge of its rounding window,
// assuming t is above the convergence threshold; <= 0 when it is not.
double WindowMargin(ConvAlgorithm algorithm, bool nearest, std::size_t terms, double t,
                    double alpha) {
  const double n = static_cast<double>(terms);
  const double width = nearest ? 0.5 : 1.0;
  if (terms == 1) return width;
  if (algorithm == ConvAlgorithm::kLogSumExp) {
    // L - M <= log_t(n) for integral data.
    return width - std::log(n) / std::log(t);
  }
  BoundRequest req;
  req.n = terms;
  req.mu_max = 1;
  req.delta = width;
  req.alpha = alpha;
  if (!(t > BoundD(req).t_min)) return 0.0;
  // M - D <= (n - 1)(1 - 1/alpha) / (t log alpha), worst case mu = 1, g = 1.
  return width - (n - 1.0) * (1.0 - 1.0 / alpha) / (t * std::log(alpha));
}

}  // namespace

const char* RoundingName(Rounding r) {
  switch (r) {
    case Rounding::kFloor: return "FLOOR";
    case Rounding::kCeil: return "CEIL";
    case Rounding::kNearest: return "NEAREST";
  }
  return "?";
}

const char* AlgorithmName(ConvAlgorithm a) {
  return a == ConvAlgorithm::kLogSumExp ? "L" : "D";
}

MaxConvResult MaxConvolve(std::span<const double> a, std::span<const double> b,
                          const MaxConvOptions& options) {
  CheckInput(a);
  CheckInput(b);
  if (!AllIntegral(a) || !AllIntegral(b)) {
    Fail(ErrorKind::kDomain, "integer max-convolution requires integral input");
  }
  const bool is_d = options.algorithm == ConvAlgorithm::kDifference;
  const double longest = static_cast<double>(std::max(a.size(), b.size()));
  const double t = options.t_star.value_or(is_d ? std::max(3.0, longest) : longest + 1.0);
  Require(t > 1.0 && std::isfinite(t), "t* must be finite and > 1");
  std::optional<double> alpha;
  if (is_d) {
    alpha = options.alpha_star.value_or(2.0);
    Require(*alpha > 1.0 && std::isfinite(*alpha), "alpha* must be > 1");
  }
  const Rounding rounding =
      options.nearest ? Rounding::kNearest : (is_d ? Rounding::kCeil : Rounding::kFloor);

  const std::size_t terms = std::min(a.size(), b.size());
  const double margin = WindowMargin(options.algorithm, options.nearest, terms, t, alpha.value_or(2.0));
  const bool valid_t = margin > 0.0;
  // Audit tolerance in log space that keeps the rounding unambiguous.
  const double scale = is_d ? std::log(*alpha) / 2.0 : std::log(t);
  const double tol = (valid_t ? margin : 1e-3) * scale / 4.0;

  Smooth s = Evaluate(a, b, options.algorithm, t, alpha, options.backend, tol, true);

  MaxConvResult out;
  out.plan = MakePlan(s, t, alpha, rounding);
  out.certified = valid_t;
  out.coefficients.resize(s.r.size());
  for (std::size_t k = 0; k < s.r.size(); ++k) {
    const double r = s.r[k];
    const double d = s.err[k];
    double c = 0.0;
    bool ok = std::isfinite(r) && std::isfinite(d);
    switch (rounding) {
      case Rounding::kFloor:
        // The true value never sits within `margin` below the next integer.
        ok = ok && (std::floor(r - d) == std::floor(r + d) || 2.0 * d < margin);
        c = std::floor(r + std::min(d, 0.25));
        break;
      case Rounding::kCeil:
        ok = ok && (std::ceil(r - d) == std::ceil(r + d) || 2.0 * d < margin);
        c = std::ceil(r - std::min(d, 0.25));
        break;
      case Rounding::kNearest:
        ok = ok && (std::round(r - d) == std::round(r + d) || d < margin);
        c = std::round(r);
        break;
    }
    out.certified = out.certified && ok;
    out.coefficients[k] = c;
  }
  out.raw_logs = std::move(s.r);
  out.raw_error = std::move(s.err);
  if (!s.base.exact.empty()) {
    out.exact_sums = std::move(s.base.exact);
    out.exact_exponent_offset = s.base.exact_offset;
  }
  return out;
}

MaxConvResult MaxConvolveL(std::span<const double> a, std::span<const double> b,
                           std::optional<double> t_star, BackendChoice backend) {
  MaxConvOptions o;
  o.t_star = t_star;
  o.backend = backend;
  return MaxConvolve(a, b, o);
}

MaxConvResult MaxConvolveD(std::span<const double> a, std::span<const double> b,
                           std::optional<double> t_star, std::optional<double> alpha_star,
                           BackendChoice backend) {
  MaxConvOptions o;
  o.algorithm = ConvAlgorithm::kDifference;
  o.t_star = t_star;
  o.alpha_star = alpha_star;
  o.backend = backend;
  return MaxConvolve(a, b, o);
}

namespace {

std::vector<double> Negated(std::span<const double> v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](double x) { return -x; });
  return out;
}

MaxConvResult Mirror(MaxConvResult r) {
  for (double& c : r.coefficients) c = 0.0 - c;
  for (double& c : r.raw_logs) c = 0.0 - c;
  if (r.plan.rounding == Rounding::kFloor) {
    r.plan.rounding = Rounding::kCeil;
  } else if (r.plan.rounding == Rounding::kCeil) {
    r.plan.rounding = Rounding::kFloor;
  }
  return r;
}

}  // namespace

MaxConvResult MinConvolve(std::span<const double> a, std::span<const double> b,
                          const MaxConvOptions& options) {
  return Mirror(MaxConvolve(Negated(a), Negated(b), options));
}

MaxConvResult MaxConvolveFloat(std::span<const double> a, std::span<const double> b,
                               const FloatConvOptions& options) {
  CheckInput(a);
  CheckInput(b);
  Require(options.t > 1.0 && std::isfinite(options.t), "t must be finite and > 1");
  Require(options.delta > 0.0, "delta must be positive");
  const bool is_d = options.algorithm == ConvAlgorithm::kDifference;
  if (is_d) {
    Require(options.alpha && *options.alpha > 0.0 && *options.alpha != 1.0 &&
                std::isfinite(*options.alpha),
            "difference algorithm needs alpha > 0, alpha != 1");
  }
  const double scale = is_d ? std::abs(std::log(*options.alpha)) / 2.0 : std::log(options.t);
  Smooth s = Evaluate(a, b, options.algorithm, options.t, options.alpha, options.backend,
                      options.delta * scale / 8.0, false);
  MaxConvResult out;
  out.plan = MakePlan(s, options.t, options.alpha, Rounding::kNearest);
  out.certified = false;
  out.coefficients = s.r;
  out.raw_logs = std::move(s.r);
  out.raw_error = std::move(s.err);
  return out;
}

MaxConvResult MinConvolveFloat(std::span<const double> a, std::span<const double> b,
                               const FloatConvOptions& options) {
  return Mirror(MaxConvolveFloat(Negated(a), Negated(b), options));
}

}  // namespace smoothmax
