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

#include "smoothmax/convolution.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <mutex>

#include "smoothmax/error.hpp"

namespace smoothmax {
namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2.0;
constexpr std::size_t kMaxLength = std::size_t{1} << 28;

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& PlannerMutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};
template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <typename T>
FftwBuffer<T> Allocate(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer<T>(p);
}

struct PlanDeleter {
  void operator()(fftw_plan p) const {
    std::lock_guard lock(PlannerMutex());
    fftw_destroy_plan(p);
  }
};
using Plan = std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDeleter>;

std::size_t OutputLength(std::size_t n, std::size_t m) {
  Require(n > 0 && m > 0, "convolution inputs must be nonempty");
  if (n > kMaxLength || m > kMaxLength) Fail(ErrorKind::kRange, "convolution length overflow");
  return n + m - 1;
}

std::vector<double> FftConvolve(std::span<const double> x, std::span<const double> y,
                                std::size_t& padded) {
  const std::size_t out_len = OutputLength(x.size(), y.size());
  padded = std::bit_ceil(out_len);
  const std::size_t spectrum = padded / 2 + 1;

  auto xr = Allocate<double>(padded);
  auto yr = Allocate<double>(padded);
  auto xc = Allocate<fftw_complex>(spectrum);
  auto yc = Allocate<fftw_complex>(spectrum);
  std::fill_n(xr.get(), padded, 0.0);
  std::fill_n(yr.get(), padded, 0.0);
  std::copy(x.begin(), x.end(), xr.get());
  std::copy(y.begin(), y.end(), yr.get());

  Plan fx, fy, inv;
  {
    std::lock_guard lock(PlannerMutex());
    const int len = static_cast<int>(padded);
    fx.reset(fftw_plan_dft_r2c_1d(len, xr.get(), xc.get(), FFTW_ESTIMATE));
    fy.reset(fftw_plan_dft_r2c_1d(len, yr.get(), yc.get(), FFTW_ESTIMATE));
    inv.reset(fftw_plan_dft_c2r_1d(len, xc.get(), xr.get(), FFTW_ESTIMATE));
  }
  fftw_execute(fx.get());
  fftw_execute(fy.get());
  for (std::size_t i = 0; i < spectrum; ++i) {
    const double re = xc[i][0] * yc[i][0] - xc[i][1] * yc[i][1];
    const double im = xc[i][0] * yc[i][1] + xc[i][1] * yc[i][0];
    xc[i][0] = re;
    xc[i][1] = im;
  }
  fftw_execute(inv.get());

  std::vector<double> out(out_len);
  const double scale = 1.0 / static_cast<double>(padded);
  for (std::size_t k = 0; k < out_len; ++k) out[k] = xr[k] * scale;
  return out;
}

}  // namespace

const char* BackendName(Backend b) {
  switch (b) {
    case Backend::kFftFloat: return "FFT_FLOAT";
    case Backend::kExactInt: return "EXACT_INT";
    case Backend::kDirect: return "DIRECT";
  }
  return "?";
}

double FftErrorBound(std::size_t padded, double max_x, double max_y) {
  const double len = static_cast<double>(padded);
  return 8.0 * kUnitRoundoff * std::max(1.0, std::log2(len)) * len * max_x * max_y;
}

std::vector<mpz_class> ConvolveExact(std::span<const mpz_class> x, std::span<const mpz_class> y) {
  const std::size_t out_len = OutputLength(x.size(), y.size());
  std::size_t bits_x = 1, bits_y = 1;
  for (const auto& v : x) {
    if (sgn(v) < 0) Fail(ErrorKind::kDomain, "exact convolution needs nonnegative input");
    bits_x = std::max(bits_x, mpz_sizeinbase(v.get_mpz_t(), 2));
  }
  for (const auto& v : y) {
    if (sgn(v) < 0) Fail(ErrorKind::kDomain, "exact convolution needs nonnegative input");
    bits_y = std::max(bits_y, mpz_sizeinbase(v.get_mpz_t(), 2));
  }
  // Each product coefficient is below 2^(bits_x + bits_y) * min(n, m), so
  // slots this wide never carry into each other.
  const std::size_t terms = std::min(x.size(), y.size());
  const std::size_t slot_bits = bits_x + bits_y + std::bit_width(terms) + 1;
  const std::size_t slot = (slot_bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

  auto pack = [slot](std::span<const mpz_class> v) {
    std::vector<mp_limb_t> limbs(v.size() * slot, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const mp_limb_t* src = mpz_limbs_read(v[i].get_mpz_t());
      std::copy_n(src, mpz_size(v[i].get_mpz_t()), limbs.begin() + i * slot);
    }
    mpz_class z;
    mpz_import(z.get_mpz_t(), limbs.size(), -1, sizeof(mp_limb_t), 0, 0, limbs.data());
    return z;
  };
  const mpz_class product = pack(x) * pack(y);

  std::vector<mpz_class> out(out_len);
  const mp_limb_t* limbs = mpz_limbs_read(product.get_mpz_t());
  const std::size_t size = mpz_size(product.get_mpz_t());
  for (std::size_t k = 0; k < out_len; ++k) {
    const std::size_t begin = k * slot;
    if (begin >= size) break;
    const std::size_t count = std::min(slot, size - begin);
    mpz_import(out[k].get_mpz_t(), count, -1, sizeof(mp_limb_t), 0, 0, limbs + begin);
  }
  return out;
}

std::vector<double> ConvolveDirectRange(std::span<const double> x, std::span<const double> y,
                                        std::size_t first, std::size_t last) {
  const std::size_t out_len = OutputLength(x.size(), y.size());
  last = std::min(last, out_len);
  std::vector<double> out;
  out.reserve(last > first ? last - first : 0);
  for (std::size_t k = first; k < last; ++k) {
    const std::size_t lo = k >= y.size() ? k - y.size() + 1 : 0;
    const std::size_t hi = std::min(k, x.size() - 1);
    double acc = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) acc += x[i] * y[k - i];
    out.push_back(acc);
  }
  return out;
}

double LogOf(const mpz_class& z) {
  if (sgn(z) <= 0) Fail(ErrorKind::kDomain, "log of a nonpositive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

Convolution Convolve(std::span<const double> x, std::span<const double> y, Backend backend) {
  const std::size_t out_len = OutputLength(x.size(), y.size());
  for (double v : x) Require(v >= 0.0 && std::isfinite(v), "convolution inputs must be nonnegative");
  for (double v : y) Require(v >= 0.0 && std::isfinite(v), "convolution inputs must be nonnegative");

  Convolution c;
  c.backend = backend;
  switch (backend) {
    case Backend::kFftFloat: {
      std::size_t padded = 0;
      c.values = FftConvolve(x, y, padded);
      const double bound = FftErrorBound(padded, *std::max_element(x.begin(), x.end()),
                                         *std::max_element(y.begin(), y.end()));
      c.error.assign(out_len, bound);
      break;
    }
    case Backend::kExactInt: {
      auto lift = [](std::span<const double> v) {
        std::vector<mpz_class> z;
        z.reserve(v.size());
        for (double e : v) {
          if (e != std::floor(e)) Fail(ErrorKind::kDomain, "exact backend needs integer entries");
          z.emplace_back(e);
        }
        return z;
      };
      const auto xz = lift(x);
      const auto yz = lift(y);
      c.exact = ConvolveExact(xz, yz);
      c.values.reserve(out_len);
      for (const auto& z : c.exact) c.values.push_back(z.get_d());
      c.error.assign(out_len, 0.0);
      break;
    }
    case Backend::kDirect: {
      c.values = ConvolveDirectRange(x, y, 0, out_len);
      c.error.resize(out_len);
      for (std::size_t k = 0; k < out_len; ++k) {
        const double terms = static_cast<double>(std::min({k + 1, x.size(), y.size()}));
        c.error[k] = (terms + 2.0) * kUnitRoundoff * c.values[k];
      }
      break;
    }
  }
  return c;
}

}  // namespace smoothmax
