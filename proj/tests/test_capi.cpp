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

// Exercises the shared library strictly through its C header.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "smoothmax/smoothmax.h"

namespace {

sm_vector* Make(std::vector<double> v) {
  sm_vector* out = nullptr;
  REQUIRE(sm_vector_create(v.data(), v.size(), &out) == SM_OK);
  return out;
}

}  // namespace

TEST_CASE("status reporting") {
  CHECK(std::string(sm_status_name(SM_OK)) == "OK");
  CHECK(std::strlen(sm_version()) > 0);
  sm_vector* v = nullptr;
  CHECK(sm_vector_create(nullptr, 0, &v) == SM_ERR_INVALID_ARGUMENT);
  CHECK(v == nullptr);
  CHECK(std::strlen(sm_last_error()) > 0);
  CHECK(sm_vector_parse("1\nfoo\n", &v) == SM_ERR_IO);
  CHECK(std::string(sm_last_error()).find("line 2") != std::string::npos);
  CHECK(sm_vector_read_file("/nonexistent/smoothmax", &v) == SM_ERR_IO);
  sm_vector_destroy(nullptr);
  sm_text_destroy(nullptr);
}

TEST_CASE("vectors and summaries") {
  sm_vector* v = nullptr;
  REQUIRE(sm_vector_parse("7,7,-1,0,1,1,2.5,2.5,7,7", &v) == SM_OK);
  CHECK(sm_vector_size(v) == 10);
  CHECK_FALSE(sm_vector_is_integral(v));
  sm_summary* s = nullptr;
  REQUIRE(sm_summarize(v, &s) == SM_OK);
  CHECK(sm_summary_max(s) == 7);
  CHECK(sm_summary_distinct_count(s) == 5);
  double value = 0, gap = 0;
  size_t mu = 0;
  CHECK(sm_summary_distinct(s, 1, &value, &mu, &gap) == SM_OK);
  CHECK(value == 2.5);
  CHECK(mu == 2);
  CHECK(gap == 4.5);
  CHECK(sm_summary_distinct(s, 5, &value, &mu, &gap) == SM_ERR_INVALID_ARGUMENT);
  sm_summary_destroy(s);
  sm_vector_destroy(v);
}

TEST_CASE("approximations") {
  sm_vector* v1 = Make({1, 2, 3, 4, 5, 6, 7});
  sm_approx a{};
  REQUIRE(sm_eval(v1, SM_METHOD_L, 3.2, 0, 0, &a) == SM_OK);
  CHECK(a.value >= 7);
  CHECK(a.value < 8);
  CHECK(std::string(sm_method_name(a.method)) == "L");
  REQUIRE(sm_eval(v1, SM_METHOD_D, 4, 0, 2, &a) == SM_OK);
  CHECK(a.value < 7);
  CHECK(sm_eval(v1, SM_METHOD_L, 0.5, 0, 0, &a) == SM_ERR_INVALID_ARGUMENT);
  double c = 0;
  REQUIRE(sm_contour_max(v1, 1, 0.1, 64, &c) == SM_OK);
  CHECK(std::fabs(c - 7) < 1e-6);
  double lcal = 0;
  REQUIRE(sm_eval_lcal(v1, std::log(4.0), &lcal) == SM_OK);
  CHECK(lcal == doctest::Approx(std::log(21844.0)));
  CHECK(sm_eval_lcal(v1, 0.0, &lcal) == SM_ERR_INVALID_ARGUMENT);
  double d[3];
  REQUIRE(sm_log_derivatives(v1, 2.0, 3, d) == SM_OK);
  REQUIRE(sm_eval(v1, SM_METHOD_R, 2.0, 0, 0, &a) == SM_OK);
  CHECK(d[0] == doctest::Approx(a.value));
  sm_vector_destroy(v1);
}

TEST_CASE("bounds and recovery") {
  sm_bound_request r{11, 5, 1, 1, 0, 0};
  double t = 0;
  int closed = 0;
  REQUIRE(sm_bound(SM_THEOREM_L, &r, &t, &closed) == SM_OK);
  CHECK(t == doctest::Approx(6.0));
  CHECK(closed == 1);
  REQUIRE(sm_bound(SM_THEOREM_R, &r, &t, &closed) == SM_OK);
  CHECK(t == doctest::Approx(std::exp(1.0)));
  CHECK(sm_bound(SM_THEOREM_D, &r, &t, &closed) == SM_ERR_INVALID_ARGUMENT);
  r.alpha = 2;
  CHECK(sm_bound(SM_THEOREM_D, &r, &t, &closed) == SM_OK);

  sm_vector* v2 = Make({1, 2, 3, 4, 5, 6, 7, 7, 7, 7, 7});
  int64_t m = 0, mu = 0;
  REQUIRE(sm_certified_multiplicity(v2, &m, &mu) == SM_OK);
  CHECK(m == 7);
  CHECK(mu == 5);
  int64_t second = 0;
  REQUIRE(sm_second_value(v2, &second, &t) == SM_OK);
  CHECK(second == 6);
  double g = 0;
  REQUIRE(sm_combined_g2(v2, 100, &g) == SM_OK);
  CHECK(std::fabs(g - 1) < 0.05);
  sm_vector* half = Make({0.5, 1});
  CHECK(sm_certified_max(half, &m) == SM_ERR_DOMAIN);
  sm_vector_destroy(half);
  sm_vector_destroy(v2);

  int64_t num[9], den[9];
  REQUIRE(sm_stirling_matrix(3, num, den) == SM_OK);
  CHECK(num[6] == 1);
  CHECK(num[7] == -3);
  CHECK(den[7] == 2);
  CHECK(sm_stirling_matrix(0, num, den) == SM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("max-convolution through the C interface") {
  sm_vector* a = Make({3, 1, 2, 4, 1, 2});
  sm_vector* b = Make({5, 3, 0, 4});
  sm_maxconv_options o;
  sm_maxconv_options_init(&o);
  o.t_star = 6;
  o.backend = SM_BACKEND_EXACT_INT;
  sm_maxconv_result* r = nullptr;
  REQUIRE(sm_maxconv(a, b, &o, &r) == SM_OK);
  const std::vector<double> expected{8, 6, 7, 9, 7, 7, 8, 5, 6};
  REQUIRE(sm_maxconv_result_size(r) == expected.size());
  const double* c = sm_maxconv_result_coefficients(r);
  CHECK(std::vector<double>(c, c + expected.size()) == expected);
  CHECK(sm_maxconv_result_certified(r) == 1);
  CHECK(sm_maxconv_result_backend(r) == SM_BACKEND_EXACT_INT);
  CHECK(sm_maxconv_result_rounding(r) == SM_ROUND_FLOOR);
  sm_text* sums = nullptr;
  double offset = -1;
  REQUIRE(sm_maxconv_result_exact_sums(r, &sums, &offset) == SM_OK);
  CHECK(std::string(sm_text_data(sums)).rfind("279936\n15552\n", 0) == 0);
  sm_text_destroy(sums);
  sm_maxconv_result_destroy(r);

  o.algorithm = SM_ALGORITHM_D;
  o.t_star = 6;
  o.alpha_star = std::exp(1.0);
  o.backend = SM_BACKEND_AUTO;
  REQUIRE(sm_maxconv(a, b, &o, &r) == SM_OK);
  c = sm_maxconv_result_coefficients(r);
  CHECK(std::vector<double>(c, c + expected.size()) == expected);
  CHECK(sm_maxconv_result_rounding(r) == SM_ROUND_CEIL);
  sm_maxconv_result_destroy(r);

  sm_maxconv_options_init(&o);
  o.minimize = 1;
  REQUIRE(sm_maxconv(a, b, &o, &r) == SM_OK);
  CHECK(sm_maxconv_result_coefficients(r)[0] == 8);
  CHECK(sm_maxconv_result_coefficients(r)[2] == 3);
  sm_maxconv_result_destroy(r);

  sm_vector* x = nullptr;
  sm_text* exact = nullptr;
  double err = 0;
  REQUIRE(sm_convolve(a, b, SM_BACKEND_EXACT_INT, &x, &err, &exact) == SM_OK);
  CHECK(sm_vector_data(x)[0] == 15);
  CHECK(exact != nullptr);
  sm_text_destroy(exact);
  sm_vector_destroy(x);
  sm_vector_destroy(a);
  sm_vector_destroy(b);
}

TEST_CASE("applications through the C interface") {
  sm_vector* v = Make({1, 4, 2, 3, 8, 1, 1, 5, 6, 7, 5});
  sm_vector* out = nullptr;
  int certified = 0;
  REQUIRE(sm_mcsp(v, 1, 0, &out, &certified) == SM_OK);
  CHECK(sm_vector_size(out) == 11);
  CHECK(sm_vector_data(out)[1] == 13);
  CHECK(sm_vector_data(out)[4] == 24);
  CHECK(certified == 1);
  sm_vector_destroy(out);
  sm_vector_destroy(v);

  sm_curve *r = nullptr, *beta = nullptr, *gamma = nullptr;
  REQUIRE(sm_service_example(10, 10, &r, &beta, &gamma) == SM_OK);
  sm_service_options so{0, 0, 0, SM_BACKEND_AUTO};
  sm_curve *lo = nullptr, *hi = nullptr;
  REQUIRE(sm_service_bounds(r, beta, gamma, &so, &lo, &hi) == SM_OK);
  CHECK(sm_curve_size(lo) == 10);
  CHECK(sm_curve_values(lo)[0] == 0);
  sm_text* csv = nullptr;
  REQUIRE(sm_curve_format_csv(lo, &csv) == SM_OK);
  CHECK(std::string(sm_text_data(csv)).rfind("T,value\n", 0) == 0);
  sm_text_destroy(csv);
  for (sm_curve* c : {r, beta, gamma, lo, hi}) sm_curve_destroy(c);

  const double coeffs[] = {0, 1};
  sm_curve* id = nullptr;
  REQUIRE(sm_discretize(coeffs, 2, 4, 5, &id) == SM_OK);
  CHECK(sm_curve_values(id)[4] == 4);
  CHECK(sm_curve_monotone(id) == 1);
  sm_curve_destroy(id);
}

TEST_CASE("tropical data through the C interface") {
  sm_vector* v = Make({1, 2, 3, 4, 5, 6, 7});
  int64_t xy[6];
  size_t count = 0;
  int degenerate = -1;
  REQUIRE(sm_newton_polygon(v, xy, &count, &degenerate) == SM_OK);
  CHECK(count == 3);
  CHECK(degenerate == 0);
  CHECK(xy[0] == 7);
  REQUIRE(sm_trop_rays(v, xy) == SM_OK);
  CHECK(xy[0] == 1);
  CHECK(xy[1] == 7);
  sm_line lines[2];
  REQUIRE(sm_tentacle_lines(v, lines) == SM_OK);
  CHECK(lines[0].slope == 7);
  CHECK(lines[1].min_tentacle == 1);
  double u[3], s[3];
  REQUIRE(sm_amoeba_boundary(v, 0, 2, 3, u, s) == SM_OK);
  CHECK(s[0] == doctest::Approx(std::log(7.0)));
  sm_vector* flat = Make({2, 2});
  CHECK(sm_trop_rays(flat, xy) == SM_ERR_DOMAIN);
  sm_vector_destroy(flat);
  sm_vector_destroy(v);
}

TEST_CASE("experiments through the C interface") {
  sm_experiment_config c;
  sm_experiment_config_init(&c);
  c.n_max = 6;
  c.reps = 2;
  sm_text* a = nullptr;
  sm_text* b = nullptr;
  REQUIRE(sm_run_experiment(&c, &a) == SM_OK);
  c.threads = 3;
  REQUIRE(sm_run_experiment(&c, &b) == SM_OK);
  CHECK(std::string(sm_text_data(a)) == std::string(sm_text_data(b)));
  CHECK(sm_text_size(a) == std::strlen(sm_text_data(a)));
  sm_text_destroy(a);
  sm_text_destroy(b);
  c.reps = 0;
  CHECK(sm_run_experiment(&c, &a) == SM_ERR_INVALID_ARGUMENT);

  sm_vector* v2 = Make({1, 2, 3, 4, 5, 6, 7, 7, 7, 7, 7});
  double t = 0;
  REQUIRE(sm_find_tstar(v2, SM_METHOD_L, 1.0, &t) == SM_OK);
  CHECK(t <= 6.0);
  sm_vector_destroy(v2);
}
