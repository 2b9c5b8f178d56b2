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

#include "smoothmax/smoothmax.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "smoothmax/applications.hpp"
#include "smoothmax/approx.hpp"
#include "smoothmax/bounds.hpp"
#include "smoothmax/convolution.hpp"
#include "smoothmax/error.hpp"
#include "smoothmax/experiment.hpp"
#include "smoothmax/io.hpp"
#include "smoothmax/maxconv.hpp"
#include "smoothmax/tropical.hpp"
#include "smoothmax/vector.hpp"

struct sm_text {
  std::string data;
};
struct sm_vector {
  smoothmax::RealVector v;
};
struct sm_summary {
  smoothmax::VectorSummary s;
};
struct sm_maxconv_result {
  smoothmax::MaxConvResult r;
};
struct sm_curve {
  smoothmax::CurveGrid c;
};

namespace {

using smoothmax::ErrorKind;

thread_local std::string g_last_error;

sm_status StatusOf(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return SM_ERR_INVALID_ARGUMENT;
    case ErrorKind::kDomain: return SM_ERR_DOMAIN;
    case ErrorKind::kNumerical: return SM_ERR_NUMERICAL;
    case ErrorKind::kCertification: return SM_ERR_CERTIFICATION;
    case ErrorKind::kRange: return SM_ERR_RANGE;
    case ErrorKind::kIo: return SM_ERR_IO;
  }
  return SM_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
sm_status Guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SM_OK;
  } catch (const smoothmax::Error& e) {
    g_last_error = e.what();
    return StatusOf(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SM_ERR_RANGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SM_ERR_INTERNAL;
  }
}

void NotNull(const void* p, const char* what) {
  if (p == nullptr) smoothmax::Fail(ErrorKind::kInvalidArgument, std::string(what) + " is null");
}

const smoothmax::RealVector& Vec(const sm_vector* v) {
  NotNull(v, "vector");
  return v->v;
}

sm_text* NewText(std::string s) { return new sm_text{std::move(s)}; }

smoothmax::BackendChoice Choice(sm_backend b) {
  switch (b) {
    case SM_BACKEND_AUTO: return smoothmax::BackendChoice::kAuto;
    case SM_BACKEND_FFT_FLOAT: return smoothmax::BackendChoice::kFftFloat;
    case SM_BACKEND_EXACT_INT: return smoothmax::BackendChoice::kExactInt;
    case SM_BACKEND_DIRECT: return smoothmax::BackendChoice::kDirect;
  }
  smoothmax::Fail(ErrorKind::kInvalidArgument, "unknown backend");
}

sm_backend BackendOf(smoothmax::Backend b) {
  switch (b) {
    case smoothmax::Backend::kFftFloat: return SM_BACKEND_FFT_FLOAT;
    case smoothmax::Backend::kExactInt: return SM_BACKEND_EXACT_INT;
    case smoothmax::Backend::kDirect: return SM_BACKEND_DIRECT;
  }
  return SM_BACKEND_AUTO;
}

smoothmax::Backend ConcreteBackend(sm_backend b) {
  switch (b) {
    case SM_BACKEND_FFT_FLOAT: return smoothmax::Backend::kFftFloat;
    case SM_BACKEND_EXACT_INT: return smoothmax::Backend::kExactInt;
    case SM_BACKEND_DIRECT: return smoothmax::Backend::kDirect;
    default: break;
  }
  smoothmax::Fail(ErrorKind::kInvalidArgument, "classical convolution needs a concrete backend");
}

sm_method MethodOf(smoothmax::Method m) { return static_cast<sm_method>(m); }

sm_approx ToC(const smoothmax::ApproxResult& r) {
  sm_approx out{};
  out.value = r.value;
  out.method = MethodOf(r.method);
  out.t = r.t;
  out.k = r.k;
  out.alpha = r.alpha;
  out.certified = r.certified ? 1 : 0;
  return out;
}

smoothmax::BoundRequest ToRequest(const sm_bound_request* req) {
  NotNull(req, "request");
  smoothmax::BoundRequest r;
  r.n = req->n;
  r.mu_max = req->mu_max;
  r.g2 = req->g2;
  r.delta = req->delta;
  if (req->alpha != 0.0) r.alpha = req->alpha;
  if (req->m_upper != 0.0) r.m_upper = req->m_upper;
  return r;
}

smoothmax::ServiceOptions ToServiceOptions(const sm_service_options* o) {
  smoothmax::ServiceOptions s;
  if (o == nullptr) return s;
  if (o->alpha != 0.0) s.alpha = o->alpha;
  if (o->t != 0.0) s.t = o->t;
  if (o->delta != 0.0) s.delta = o->delta;
  s.backend = Choice(o->backend);
  return s;
}

}  // namespace

extern "C" {

const char* sm_version(void) { return "0.1.0"; }

const char* sm_status_name(sm_status status) {
  switch (status) {
    case SM_OK: return "OK";
    case SM_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case SM_ERR_DOMAIN: return "DOMAIN";
    case SM_ERR_NUMERICAL: return "NUMERICAL";
    case SM_ERR_CERTIFICATION: return "CERTIFICATION";
    case SM_ERR_IO: return "IO";
    case SM_ERR_RANGE: return "RANGE";
    case SM_ERR_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* sm_last_error(void) { return g_last_error.c_str(); }

const char* sm_text_data(const sm_text* text) { return text ? text->data.c_str() : ""; }
size_t sm_text_size(const sm_text* text) { return text ? text->data.size() : 0; }
void sm_text_destroy(sm_text* text) { delete text; }

sm_status sm_vector_create(const double* data, size_t n, sm_vector** out) {
  return Guard([&] {
    NotNull(out, "out");
    if (n > 0) NotNull(data, "data");
    *out = new sm_vector{smoothmax::RealVector(std::vector<double>(data, data + n))};
  });
}

sm_status sm_vector_parse(const char* text, sm_vector** out) {
  return Guard([&] {
    NotNull(text, "text");
    NotNull(out, "out");
    *out = new sm_vector{smoothmax::RealVector(smoothmax::ParseVector(text))};
  });
}

sm_status sm_vector_read_file(const char* path, sm_vector** out) {
  return Guard([&] {
    NotNull(path, "path");
    NotNull(out, "out");
    *out = new sm_vector{smoothmax::RealVector(smoothmax::ReadVectorFile(path))};
  });
}

sm_status sm_vector_write_file(const sm_vector* v, const char* path) {
  return Guard([&] {
    NotNull(path, "path");
    smoothmax::WriteVectorFile(path, Vec(v).entries());
  });
}

void sm_vector_destroy(sm_vector* v) { delete v; }
size_t sm_vector_size(const sm_vector* v) { return v ? v->v.size() : 0; }
const double* sm_vector_data(const sm_vector* v) { return v ? v->v.entries().data() : nullptr; }
int sm_vector_is_integral(const sm_vector* v) { return v && v->v.is_integral() ? 1 : 0; }

sm_status sm_format_number(double x, sm_text** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = NewText(smoothmax::FormatNumber(x));
  });
}

sm_status sm_summarize(const sm_vector* v, sm_summary** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new sm_summary{smoothmax::Summarize(Vec(v))};
  });
}

void sm_summary_destroy(sm_summary* s) { delete s; }
double sm_summary_max(const sm_summary* s) { return s ? s->s.max : 0.0; }
double sm_summary_min(const sm_summary* s) { return s ? s->s.min : 0.0; }
size_t sm_summary_distinct_count(const sm_summary* s) { return s ? s->s.distinct_count() : 0; }

sm_status sm_summary_distinct(const sm_summary* s, size_t i, double* value, size_t* multiplicity,
                              double* gap) {
  return Guard([&] {
    NotNull(s, "summary");
    if (i >= s->s.distinct_count()) smoothmax::Fail(ErrorKind::kInvalidArgument, "index out of range");
    if (value) *value = s->s.distinct[i];
    if (multiplicity) *multiplicity = s->s.multiplicity[i];
    if (gap) *gap = s->s.gaps[i];
  });
}

const char* sm_method_name(sm_method m) {
  if (m < SM_METHOD_L || m > SM_METHOD_CONTOUR) return "?";
  return smoothmax::MethodName(static_cast<smoothmax::Method>(m));
}

sm_status sm_eval_lcal(const sm_vector* v, double u, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = smoothmax::LogPowerSum(Vec(v), u);
  });
}

sm_status sm_eval(const sm_vector* v, sm_method method, double t, int k, double alpha,
                  sm_approx* out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto& vec = Vec(v);
    smoothmax::ApproxResult r;
    switch (method) {
      case SM_METHOD_L: r = smoothmax::LogSumExpMax(vec, t); break;
      case SM_METHOD_R: r = smoothmax::RatioMax(vec, t); break;
      case SM_METHOD_RK: r = smoothmax::HigherRatioMax(vec, t, k); break;
      case SM_METHOD_D: r = smoothmax::DifferenceMax(vec, t, alpha); break;
      case SM_METHOD_PNORM: r = smoothmax::PNormMax(vec, t); break;
      default: smoothmax::Fail(ErrorKind::kInvalidArgument, "method not supported by sm_eval");
    }
    *out = ToC(r);
  });
}

sm_status sm_contour_max(const sm_vector* v, int k, double r, int n_points, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = smoothmax::ContourMax(Vec(v), k, r, n_points);
  });
}

sm_status sm_log_derivatives(const sm_vector* v, double t, int order, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto d = smoothmax::LogDerivatives(Vec(v), t, order);
    std::copy(d.begin(), d.end(), out);
  });
}

sm_status sm_bound(sm_theorem theorem, const sm_bound_request* req, double* t_min,
                   int* closed_form) {
  return Guard([&] {
    NotNull(t_min, "t_min");
    const auto r = ToRequest(req);
    smoothmax::BoundResult b;
    switch (theorem) {
      case SM_THEOREM_L: b = smoothmax::BoundL(r); break;
      case SM_THEOREM_R: b = smoothmax::BoundR(r); break;
      case SM_THEOREM_D: b = smoothmax::BoundD(r); break;
      case SM_THEOREM_PNORM: b = smoothmax::BoundPNorm(r); break;
      default: smoothmax::Fail(ErrorKind::kInvalidArgument, "unknown theorem");
    }
    *t_min = b.t_min;
    if (closed_form) *closed_form = b.closed_form ? 1 : 0;
  });
}

sm_status sm_certified_max(const sm_vector* v, int64_t* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = smoothmax::CertifiedMax(Vec(v));
  });
}

sm_status sm_certified_multiplicity(const sm_vector* v, int64_t* max, int64_t* mu) {
  return Guard([&] {
    NotNull(max, "max");
    NotNull(mu, "mu");
    const auto r = smoothmax::CertifiedMultiplicity(Vec(v));
    *max = r.max;
    *mu = r.multiplicity;
  });
}

sm_status sm_combined_max(const sm_vector* v, double t, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = smoothmax::CombinedMax(Vec(v), t);
  });
}

sm_status sm_combined_g2(const sm_vector* v, double t, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = smoothmax::CombinedGap(Vec(v), t);
  });
}

sm_status sm_second_value(const sm_vector* v, int64_t* value, double* t_used) {
  return Guard([&] {
    NotNull(value, "value");
    const auto r = smoothmax::SecondValue(Vec(v));
    *value = r.value;
    if (t_used) *t_used = r.t;
  });
}

sm_status sm_stirling_matrix(int r, int64_t* num, int64_t* den) {
  return Guard([&] {
    NotNull(num, "num");
    NotNull(den, "den");
    const auto m = smoothmax::StirlingMatrix(r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        num[i * r + j] = m[i][j].num;
        den[i * r + j] = m[i][j].den;
      }
    }
  });
}

const char* sm_backend_name(sm_backend b) {
  if (b == SM_BACKEND_AUTO) return "AUTO";
  if (b < SM_BACKEND_AUTO || b > SM_BACKEND_DIRECT) return "?";
  return smoothmax::BackendName(ConcreteBackend(b));
}

sm_status sm_convolve(const sm_vector* x, const sm_vector* y, sm_backend backend,
                      sm_vector** values, double* max_error, sm_text** exact_decimal) {
  return Guard([&] {
    NotNull(values, "values");
    const auto c = smoothmax::Convolve(Vec(x).entries(), Vec(y).entries(), ConcreteBackend(backend));
    double worst = 0.0;
    for (double e : c.error) worst = std::max(worst, e);
    std::string decimal;
    for (const auto& z : c.exact) decimal += z.get_str() + '\n';
    *values = new sm_vector{smoothmax::RealVector(c.values)};
    if (max_error) *max_error = worst;
    if (exact_decimal) *exact_decimal = c.exact.empty() ? nullptr : NewText(std::move(decimal));
  });
}

void sm_maxconv_options_init(sm_maxconv_options* o) {
  if (o == nullptr) return;
  *o = sm_maxconv_options{};
  o->algorithm = SM_ALGORITHM_L;
  o->backend = SM_BACKEND_AUTO;
}

sm_status sm_maxconv(const sm_vector* a, const sm_vector* b, const sm_maxconv_options* options,
                     sm_maxconv_result** out) {
  return Guard([&] {
    NotNull(out, "out");
    sm_maxconv_options o;
    sm_maxconv_options_init(&o);
    if (options) o = *options;
    const auto algorithm = o.algorithm == SM_ALGORITHM_D ? smoothmax::ConvAlgorithm::kDifference
                                                         : smoothmax::ConvAlgorithm::kLogSumExp;
    const auto ea = Vec(a).entries();
    const auto eb = Vec(b).entries();
    smoothmax::MaxConvResult r;
    if (o.real_valued) {
      smoothmax::FloatConvOptions f;
      f.algorithm = algorithm;
      if (o.t_star == 0.0) smoothmax::Fail(ErrorKind::kInvalidArgument, "real-valued mode needs t");
      f.t = o.t_star;
      if (o.alpha_star != 0.0) f.alpha = o.alpha_star;
      if (algorithm == smoothmax::ConvAlgorithm::kDifference && !f.alpha) f.alpha = 2.0;
      if (o.delta != 0.0) f.delta = o.delta;
      f.backend = Choice(o.backend);
      r = o.minimize ? smoothmax::MinConvolveFloat(ea, eb, f) : smoothmax::MaxConvolveFloat(ea, eb, f);
    } else {
      smoothmax::MaxConvOptions m;
      m.algorithm = algorithm;
      if (o.t_star != 0.0) m.t_star = o.t_star;
      if (o.alpha_star != 0.0) m.alpha_star = o.alpha_star;
      m.backend = Choice(o.backend);
      m.nearest = o.nearest != 0;
      r = o.minimize ? smoothmax::MinConvolve(ea, eb, m) : smoothmax::MaxConvolve(ea, eb, m);
    }
    *out = new sm_maxconv_result{std::move(r)};
  });
}

void sm_maxconv_result_destroy(sm_maxconv_result* r) { delete r; }
size_t sm_maxconv_result_size(const sm_maxconv_result* r) { return r ? r->r.coefficients.size() : 0; }
const double* sm_maxconv_result_coefficients(const sm_maxconv_result* r) {
  return r ? r->r.coefficients.data() : nullptr;
}
const double* sm_maxconv_result_raw(const sm_maxconv_result* r) { return r ? r->r.raw_logs.data() : nullptr; }
const double* sm_maxconv_result_raw_error(const sm_maxconv_result* r) {
  return r ? r->r.raw_error.data() : nullptr;
}
int sm_maxconv_result_certified(const sm_maxconv_result* r) { return r && r->r.certified ? 1 : 0; }
sm_backend sm_maxconv_result_backend(const sm_maxconv_result* r) {
  return r ? BackendOf(r->r.plan.backend) : SM_BACKEND_AUTO;
}
sm_rounding sm_maxconv_result_rounding(const sm_maxconv_result* r) {
  return r ? static_cast<sm_rounding>(r->r.plan.rounding) : SM_ROUND_FLOOR;
}
double sm_maxconv_result_t_star(const sm_maxconv_result* r) { return r ? r->r.plan.t_star : 0.0; }
double sm_maxconv_result_alpha_star(const sm_maxconv_result* r) {
  return r ? r->r.plan.alpha_star.value_or(0.0) : 0.0;
}
double sm_maxconv_result_fft_error_bound(const sm_maxconv_result* r) {
  return r ? r->r.plan.fft_error_bound : 0.0;
}
size_t sm_maxconv_result_patched(const sm_maxconv_result* r) { return r ? r->r.plan.patched : 0; }

sm_status sm_maxconv_result_exact_sums(const sm_maxconv_result* r, sm_text** decimal,
                                       double* exponent_offset) {
  return Guard([&] {
    NotNull(r, "result");
    NotNull(decimal, "decimal");
    if (r->r.exact_sums.empty()) {
      smoothmax::Fail(ErrorKind::kInvalidArgument, "result carries no exact power sums");
    }
    std::string s;
    for (const auto& z : r->r.exact_sums) s += z.get_str() + '\n';
    *decimal = NewText(std::move(s));
    if (exponent_offset) *exponent_offset = r->r.exact_exponent_offset;
  });
}

sm_status sm_curve_create(const double* times, const double* values, size_t n, sm_curve** out) {
  return Guard([&] {
    NotNull(out, "out");
    NotNull(times, "times");
    NotNull(values, "values");
    *out = new sm_curve{smoothmax::MakeCurveGrid(std::vector<double>(times, times + n),
                                                 std::vector<double>(values, values + n))};
  });
}

sm_status sm_curve_read_csv(const char* path, sm_curve** out) {
  return Guard([&] {
    NotNull(path, "path");
    NotNull(out, "out");
    *out = new sm_curve{smoothmax::ReadCurveCsv(path)};
  });
}

sm_status sm_curve_write_csv(const sm_curve* c, const char* path) {
  return Guard([&] {
    NotNull(c, "curve");
    NotNull(path, "path");
    smoothmax::WriteCurveCsv(path, c->c);
  });
}

sm_status sm_curve_format_csv(const sm_curve* c, sm_text** out) {
  return Guard([&] {
    NotNull(c, "curve");
    NotNull(out, "out");
    *out = NewText(smoothmax::FormatCurveCsv(c->c));
  });
}

void sm_curve_destroy(sm_curve* c) { delete c; }
size_t sm_curve_size(const sm_curve* c) { return c ? c->c.size() : 0; }
const double* sm_curve_times(const sm_curve* c) { return c ? c->c.times.data() : nullptr; }
const double* sm_curve_values(const sm_curve* c) { return c ? c->c.values.data() : nullptr; }
int sm_curve_monotone(const sm_curve* c) { return c && c->c.monotone ? 1 : 0; }

sm_status sm_discretize(const double* coefficients, size_t count, double t_max, size_t n,
                        sm_curve** out) {
  return Guard([&] {
    NotNull(coefficients, "coefficients");
    NotNull(out, "out");
    *out = new sm_curve{smoothmax::Discretize(std::span(coefficients, count), t_max, n)};
  });
}

sm_status sm_service_example(double t_max, size_t n, sm_curve** r, sm_curve** beta,
                             sm_curve** gamma) {
  return Guard([&] {
    NotNull(r, "r");
    NotNull(beta, "beta");
    NotNull(gamma, "gamma");
    auto rc = smoothmax::Discretize(smoothmax::kServiceInputCoefficients, t_max, n);
    auto bc = smoothmax::SampleCurve([](double x) { return x; }, t_max, n);
    auto gc = smoothmax::SampleCurve(
        [](double x) { return std::max(0.0, x - smoothmax::kServiceDelay); }, t_max, n);
    *r = new sm_curve{std::move(rc)};
    *beta = new sm_curve{std::move(bc)};
    *gamma = new sm_curve{std::move(gc)};
  });
}

sm_status sm_service_bounds(const sm_curve* r, const sm_curve* beta, const sm_curve* gamma,
                            const sm_service_options* options, sm_curve** lower,
                            sm_curve** upper) {
  return Guard([&] {
    NotNull(r, "r");
    NotNull(beta, "beta");
    NotNull(gamma, "gamma");
    NotNull(lower, "lower");
    NotNull(upper, "upper");
    auto b = smoothmax::ComputeServiceBounds(r->c, beta->c, gamma->c, ToServiceOptions(options));
    *lower = new sm_curve{std::move(b.lower)};
    *upper = new sm_curve{std::move(b.upper)};
  });
}

sm_status sm_mcsp(const sm_vector* v, int include_full_sum, double t, sm_vector** out,
                  int* certified) {
  return Guard([&] {
    NotNull(out, "out");
    smoothmax::McspOptions o;
    o.include_full_sum = include_full_sum != 0;
    if (t != 0.0) o.t = t;
    auto r = smoothmax::Mcsp(Vec(v).entries(), o);
    if (r.sums.empty()) smoothmax::Fail(ErrorKind::kInvalidArgument, "MCSP output is empty");
    *out = new sm_vector{smoothmax::RealVector(std::move(r.sums))};
    if (certified) *certified = r.certified ? 1 : 0;
  });
}

sm_status sm_newton_polygon(const sm_vector* v, int64_t xy[6], size_t* count, int* degenerate) {
  return Guard([&] {
    NotNull(xy, "xy");
    const auto p = smoothmax::MakeNewtonPolygon(Vec(v));
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      xy[2 * i] = p.vertices[i].x;
      xy[2 * i + 1] = p.vertices[i].y;
    }
    if (count) *count = p.vertices.size();
    if (degenerate) *degenerate = p.degenerate ? 1 : 0;
  });
}

sm_status sm_tentacle_lines(const sm_vector* v, sm_line out[2]) {
  return Guard([&] {
    NotNull(out, "out");
    const auto lines = smoothmax::TentacleLines(Vec(v));
    for (int i = 0; i < 2; ++i) {
      out[i].vertical = lines[i].kind == smoothmax::Line2D::Kind::kVertical ? 1 : 0;
      out[i].slope = lines[i].slope;
      out[i].intercept = lines[i].intercept;
      out[i].min_tentacle = lines[i].label == smoothmax::Line2D::Label::kMinTentacle ? 1 : 0;
    }
  });
}

sm_status sm_trop_rays(const sm_vector* v, int64_t xy[6]) {
  return Guard([&] {
    NotNull(xy, "xy");
    const auto rays = smoothmax::TropicalRays(Vec(v));
    for (std::size_t i = 0; i < rays.size(); ++i) {
      xy[2 * i] = rays[i].x;
      xy[2 * i + 1] = rays[i].y;
    }
  });
}

sm_status sm_amoeba_boundary(const sm_vector* v, double u_min, double u_max, size_t samples,
                             double* u, double* s) {
  return Guard([&] {
    NotNull(u, "u");
    NotNull(s, "s");
    const auto pts = smoothmax::AmoebaUpperBoundary(Vec(v), u_min, u_max, samples);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      u[i] = pts[i].u;
      s[i] = pts[i].s;
    }
  });
}

sm_status sm_amoeba_csv(const sm_vector* v, double u_min, double u_max, size_t samples,
                        sm_text** out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto pts = smoothmax::AmoebaUpperBoundary(Vec(v), u_min, u_max, samples);
    *out = NewText(smoothmax::FormatBoundaryCsv(pts));
  });
}

sm_status sm_tentacles_csv(const sm_vector* v, sm_text** out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto lines = smoothmax::TentacleLines(Vec(v));
    *out = NewText(smoothmax::FormatLinesCsv(lines));
  });
}

void sm_experiment_config_init(sm_experiment_config* cfg) {
  if (cfg == nullptr) return;
  const smoothmax::ExperimentConfig d;
  cfg->kind = SM_EXPERIMENT_INTEGER;
  cfg->M = d.M;
  cfg->n_max = d.n_max;
  cfg->reps = d.reps;
  cfg->delta_rule = SM_DELTA_ONE;
  cfg->g_steps = d.g_steps;
  cfg->eps_steps = d.eps_steps;
  cfg->seed = d.seed;
  cfg->threads = d.threads;
}

sm_status sm_run_experiment(const sm_experiment_config* cfg, sm_text** csv) {
  return Guard([&] {
    NotNull(cfg, "config");
    NotNull(csv, "csv");
    smoothmax::ExperimentConfig c;
    if (cfg->kind < SM_EXPERIMENT_INTEGER || cfg->kind > SM_EXPERIMENT_CLUSTER) {
      smoothmax::Fail(ErrorKind::kInvalidArgument, "unknown experiment kind");
    }
    if (cfg->delta_rule < SM_DELTA_ONE || cfg->delta_rule > SM_DELTA_HUNDREDTH) {
      smoothmax::Fail(ErrorKind::kInvalidArgument, "unknown delta rule");
    }
    c.kind = static_cast<smoothmax::ExperimentKind>(cfg->kind);
    c.M = cfg->M;
    c.n_max = cfg->n_max;
    c.reps = cfg->reps;
    c.delta_rule = static_cast<smoothmax::DeltaRule>(cfg->delta_rule);
    c.g_steps = cfg->g_steps;
    c.eps_steps = cfg->eps_steps;
    c.seed = cfg->seed;
    c.threads = cfg->threads;
    *csv = NewText(smoothmax::RunExperiment(c));
  });
}

sm_status sm_find_tstar(const sm_vector* v, sm_method method, double delta, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    if (method != SM_METHOD_L && method != SM_METHOD_R) {
      smoothmax::Fail(ErrorKind::kInvalidArgument, "t* search supports L and R");
    }
    *out = smoothmax::FindTStar(Vec(v), static_cast<smoothmax::Method>(method), delta);
  });
}

}  // extern "C"
