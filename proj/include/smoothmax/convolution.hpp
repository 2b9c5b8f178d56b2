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

#ifndef SMOOTHMAX_CONVOLUTION_HPP_
#define SMOOTHMAX_CONVOLUTION_HPP_

// Classical (sum-product) convolution of nonnegative vectors.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace smoothmax {

enum class Backend {
  kFftFloat,  // double-precision FFT, absolute error audited
  kExactInt,  // arbitrary-precision integers, exact
  kDirect,    // O(nm) summation of nonnegative terms, relative error audited
};

const char* BackendName(Backend b);

struct Convolution {
  Backend backend = Backend::kFftFloat;
  std::vector<double> values;     // nearest doubles of the coefficients
  std::vector<double> error;      // absolute error bound per coefficient
  std::vector<mpz_class> exact;   // kExactInt only
};

// Conservative absolute error bound for a double FFT convolution of
// length-`padded` transforms: 8 u log2(L) L max|x| max|y|.
double FftErrorBound(std::size_t padded, double max_x, double max_y);

// Dispatches on the backend. kExactInt requires integer-valued entries.
Convolution Convolve(std::span<const double> x, std::span<const double> y, Backend backend);

// Exact product of polynomials with nonnegative big-integer coefficients,
// computed by packing the coefficients into two integers (Kronecker
// substitution) and multiplying them with GMP.
std::vector<mpz_class> ConvolveExact(std::span<const mpz_class> x, std::span<const mpz_class> y);

// Coefficients [first, last) of x * y by direct summation.
std::vector<double> ConvolveDirectRange(std::span<const double> x, std::span<const double> y,
                                        std::size_t first, std::size_t last);

// Natural log of a positive big integer, accurate to a few ulps.
double LogOf(const mpz_class& z);

}  // namespace smoothmax

#endif  // SMOOTHMAX_CONVOLUTION_HPP_
