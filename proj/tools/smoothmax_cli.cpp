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

// Command-line front end. Everything goes through the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smoothmax/smoothmax.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

// Carries a C status out of a command body.
struct Failure {
  sm_status status;
  std::string message;
};

void Check(sm_status s) {
  if (s != SM_OK) throw Failure{s, sm_last_error()};
}

int ExitCodeFor(sm_status s) {
  return (s == SM_ERR_INVALID_ARGUMENT || s == SM_ERR_IO) ? kExitUsage : kExitFailure;
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Vector = std::unique_ptr<sm_vector, Deleter<sm_vector, sm_vector_destroy>>;
using Text = std::unique_ptr<sm_text, Deleter<sm_text, sm_text_destroy>>;
using Curve = std::unique_ptr<sm_curve, Deleter<sm_curve, sm_curve_destroy>>;
using Summary = std::unique_ptr<sm_summary, Deleter<sm_summary, sm_summary_destroy>>;
using ConvResult =
    std::unique_ptr<sm_maxconv_result, Deleter<sm_maxconv_result, sm_maxconv_result_destroy>>;

Vector Load(const std::string& path) {
  sm_vector* v = nullptr;
  Check(sm_vector_read_file(path.c_str(), &v));
  return Vector(v);
}

std::vector<double> Values(const sm_vector* v) {
  const double* d = sm_vector_data(v);
  return std::vector<double>(d, d + sm_vector_size(v));
}

std::string Num(double x) {
  sm_text* t = nullptr;
  Check(sm_format_number(x, &t));
  Text owned(t);
  return sm_text_data(t);
}

// JSON numbers must be finite; anything else is reported as a string.
json JNum(double x) { return std::isfinite(x) ? json(x) : json(Num(x)); }

json JArray(const double* data, std::size_t n) {
  json a = json::array();
  for (std::size_t i = 0; i < n; ++i) a.push_back(JNum(data[i]));
  return a;
}

void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw Failure{SM_ERR_IO, "cannot write '" + out_path + "'"};
  f << text;
}

void EmitJson(const json& j, const std::string& out_path) { Emit(j.dump(2) + "\n", out_path); }

sm_backend ParseBackend(const std::string& s) {
  if (s == "auto") return SM_BACKEND_AUTO;
  if (s == "fft") return SM_BACKEND_FFT_FLOAT;
  if (s == "exact") return SM_BACKEND_EXACT_INT;
  if (s == "direct") return SM_BACKEND_DIRECT;
  throw Failure{SM_ERR_INVALID_ARGUMENT, "unknown backend '" + s + "'"};
}

const std::vector<std::string> kBackends{"auto", "fft", "exact", "direct"};

unsigned ThreadsFromEnvironment() {
  const char* s = std::getenv("SMOOTHMAX_THREADS");
  if (s == nullptr || *s == '\0') return 1;
  char* end = nullptr;
  const unsigned long n = std::strtoul(s, &end, 10);
  if (*end != '\0') throw Failure{SM_ERR_INVALID_ARGUMENT, "SMOOTHMAX_THREADS must be an integer"};
  return static_cast<unsigned>(n);
}

// ---- commands ----

void Summarize(const std::string& path, const std::string& out) {
  auto v = Load(path);
  sm_summary* raw = nullptr;
  Check(sm_summarize(v.get(), &raw));
  Summary s(raw);
  json j;
  j["n"] = sm_vector_size(v.get());
  j["max"] = sm_summary_max(s.get());
  j["min"] = sm_summary_min(s.get());
  j["distinct_count"] = sm_summary_distinct_count(s.get());
  j["is_integral"] = sm_vector_is_integral(v.get()) != 0;
  json rows = json::array();
  for (std::size_t i = 0; i < sm_summary_distinct_count(s.get()); ++i) {
    double value = 0, gap = 0;
    std::size_t mu = 0;
    Check(sm_summary_distinct(s.get(), i, &value, &mu, &gap));
    rows.push_back({{"value", value}, {"multiplicity", mu}, {"gap", gap}});
  }
  j["distinct"] = rows;
  EmitJson(j, out);
}

struct EvalArgs {
  std::string path, method = "L";
  double t = 0, alpha = 2, r = 0.1;
  int k = 1, points = 64;
  bool json_out = false;
};

void Eval(const EvalArgs& a) {
  auto v = Load(a.path);
  json j;
  if (a.method == "contour") {
    double value = 0;
    Check(sm_contour_max(v.get(), a.k, a.r, a.points, &value));
    j = {{"method", "CONTOUR"}, {"value", value}, {"t", a.r}, {"certified", false},
         {"error_bound", nullptr}};
  } else {
    sm_method m;
    if (a.method == "L") m = SM_METHOD_L;
    else if (a.method == "R") m = SM_METHOD_R;
    else if (a.method == "Rk") m = SM_METHOD_RK;
    else if (a.method == "D") m = SM_METHOD_D;
    else if (a.method == "pnorm") m = SM_METHOD_PNORM;
    else throw Failure{SM_ERR_INVALID_ARGUMENT, "unknown method '" + a.method + "'"};
    if (a.t == 0) throw Failure{SM_ERR_INVALID_ARGUMENT, "--t is required"};
    sm_approx r{};
    Check(sm_eval(v.get(), m, a.t, a.k, a.alpha, &r));
    j = {{"method", sm_method_name(r.method)}, {"value", JNum(r.value)}, {"t", r.t},
         {"certified", r.certified != 0}, {"error_bound", nullptr}};
  }
  if (a.json_out) {
    EmitJson(j, "");
  } else {
    std::cout << Num(j["value"].get<double>()) << "\n";
  }
}

struct BoundArgs {
  std::string theorem = "L";
  std::size_t n = 1, mu = 1;
  double g2 = 1, delta = 1, alpha = 0, m_upper = 0;
};

void Bound(const BoundArgs& a) {
  sm_theorem th;
  if (a.theorem == "L") th = SM_THEOREM_L;
  else if (a.theorem == "R") th = SM_THEOREM_R;
  else if (a.theorem == "D") th = SM_THEOREM_D;
  else if (a.theorem == "pnorm") th = SM_THEOREM_PNORM;
  else throw Failure{SM_ERR_INVALID_ARGUMENT, "unknown theorem '" + a.theorem + "'"};
  const sm_bound_request req{a.n, a.mu, a.g2, a.delta, a.alpha, a.m_upper};
  double t_min = 0;
  int closed = 0;
  Check(sm_bound(th, &req, &t_min, &closed));
  EmitJson({{"theorem", a.theorem}, {"t_min", t_min}, {"closed_form", closed != 0}}, "");
}

void Certify(const std::string& path, bool second) {
  auto v = Load(path);
  std::int64_t max = 0, mu = 0;
  Check(sm_certified_multiplicity(v.get(), &max, &mu));
  json j{{"max", max}, {"multiplicity", mu}};
  if (second) {
    std::int64_t value = 0;
    double t = 0;
    Check(sm_second_value(v.get(), &value, &t));
    j["second_value"] = value;
    j["second_value_t"] = t;
    j["second_value_heuristic"] = true;
  }
  EmitJson(j, "");
}

void Combined(const std::string& path, double t) {
  auto v = Load(path);
  double m = 0, g = 0;
  Check(sm_combined_max(v.get(), t, &m));
  Check(sm_combined_g2(v.get(), t, &g));
  EmitJson({{"t", t}, {"combined_max", m}, {"combined_g2", g}}, "");
}

void Stirling(int r) {
  if (r < 1) throw Failure{SM_ERR_INVALID_ARGUMENT, "--r must be >= 1"};
  std::vector<std::int64_t> num(std::size_t(r) * r), den(std::size_t(r) * r);
  Check(sm_stirling_matrix(r, num.data(), den.data()));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const auto n = num[i * r + j], d = den[i * r + j];
      std::cout << (j ? "," : "") << n;
      if (d != 1) std::cout << '/' << d;
    }
    std::cout << "\n";
  }
}

struct ConvArgs {
  std::string a, b, algorithm = "L", backend = "auto", out;
  double t = 0, alpha = 0, delta = 0;
  bool certify = false, nearest = false, real_valued = false, json_out = false, exact_sums = false;
};

int MaxConv(const ConvArgs& a, bool minimize) {
  auto va = Load(a.a);
  auto vb = Load(a.b);
  sm_maxconv_options o;
  sm_maxconv_options_init(&o);
  if (a.algorithm == "L") o.algorithm = SM_ALGORITHM_L;
  else if (a.algorithm == "D") o.algorithm = SM_ALGORITHM_D;
  else throw Failure{SM_ERR_INVALID_ARGUMENT, "unknown algorithm '" + a.algorithm + "'"};
  o.t_star = a.t;
  o.alpha_star = a.alpha;
  o.backend = ParseBackend(a.backend);
  o.nearest = a.nearest;
  o.minimize = minimize;
  o.real_valued = a.real_valued;
  o.delta = a.delta;
  sm_maxconv_result* raw = nullptr;
  Check(sm_maxconv(va.get(), vb.get(), &o, &raw));
  ConvResult r(raw);
  const std::size_t n = sm_maxconv_result_size(r.get());
  const double* err = sm_maxconv_result_raw_error(r.get());
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, err[i]);
  const bool certified = sm_maxconv_result_certified(r.get()) != 0;

  if (a.json_out) {
    json j;
    j["method"] = std::string(minimize ? "minconv-" : "maxconv-") + a.algorithm;
    j["value"] = JArray(sm_maxconv_result_coefficients(r.get()), n);
    j["t"] = sm_maxconv_result_t_star(r.get());
    if (o.algorithm == SM_ALGORITHM_D) j["alpha"] = sm_maxconv_result_alpha_star(r.get());
    j["certified"] = certified;
    j["error_bound"] = JNum(worst);
    j["backend"] = sm_backend_name(sm_maxconv_result_backend(r.get()));
    j["fft_error_bound"] = sm_maxconv_result_fft_error_bound(r.get());
    j["patched"] = sm_maxconv_result_patched(r.get());
    j["raw"] = JArray(sm_maxconv_result_raw(r.get()), n);
    if (a.exact_sums) {
      sm_text* t = nullptr;
      double offset = 0;
      if (sm_maxconv_result_exact_sums(r.get(), &t, &offset) == SM_OK) {
        Text owned(t);
        json sums = json::array();
        std::string s = sm_text_data(t);
        for (std::size_t p = 0, q; (q = s.find('\n', p)) != std::string::npos; p = q + 1) {
          sums.push_back(s.substr(p, q - p));
        }
        j["exact_sums"] = sums;
        j["exact_exponent_offset"] = offset;
      }
    }
    EmitJson(j, a.out);
  } else {
    std::string text;
    const double* c = sm_maxconv_result_coefficients(r.get());
    for (std::size_t i = 0; i < n; ++i) text += Num(c[i]) + "\n";
    Emit(text, a.out);
  }
  if (a.certify && !certified) {
    std::cerr << "error: result could not be certified\n";
    return kExitFailure;
  }
  return 0;
}

void Conv(const std::string& x, const std::string& y, const std::string& backend) {
  auto vx = Load(x);
  auto vy = Load(y);
  sm_backend b = ParseBackend(backend);
  if (b == SM_BACKEND_AUTO) b = SM_BACKEND_FFT_FLOAT;
  sm_vector* values = nullptr;
  sm_text* exact = nullptr;
  double err = 0;
  Check(sm_convolve(vx.get(), vy.get(), b, &values, &err, &exact));
  Vector owned(values);
  Text owned_text(exact);
  if (exact != nullptr) {
    std::cout << sm_text_data(exact);
  } else {
    for (double v : Values(values)) std::cout << Num(v) << "\n";
    std::cerr << "error bound: " << Num(err) << "\n";
  }
}

void McspCommand(const std::string& path, bool no_full, double t, bool json_out) {
  auto v = Load(path);
  sm_vector* out = nullptr;
  int certified = 0;
  Check(sm_mcsp(v.get(), no_full ? 0 : 1, t, &out, &certified));
  Vector owned(out);
  const auto sums = Values(out);
  if (json_out) {
    EmitJson({{"method", "mcsp"}, {"value", JArray(sums.data(), sums.size())}, {"t", t},
              {"certified", certified != 0}, {"error_bound", nullptr}}, "");
  } else {
    for (double s : sums) std::cout << Num(s) << "\n";
  }
}

Curve ReadCurve(const std::string& path) {
  sm_curve* c = nullptr;
  Check(sm_curve_read_csv(path.c_str(), &c));
  return Curve(c);
}

struct ServiceArgs {
  std::string r, beta, gamma, out, lower_out, upper_out;
  bool example = false;
  std::size_t n = 100;
  double t_max = 10.0, alpha = 0, t = 0;
  std::string backend = "auto";
};

void Service(const ServiceArgs& a) {
  Curve r, beta, gamma;
  if (a.example) {
    sm_curve *cr = nullptr, *cb = nullptr, *cg = nullptr;
    Check(sm_service_example(a.t_max, a.n, &cr, &cb, &cg));
    r.reset(cr);
    beta.reset(cb);
    gamma.reset(cg);
  } else {
    if (a.r.empty() || a.beta.empty() || a.gamma.empty()) {
      throw Failure{SM_ERR_INVALID_ARGUMENT, "--r, --beta and --gamma are required (or --example)"};
    }
    r = ReadCurve(a.r);
    beta = ReadCurve(a.beta);
    gamma = ReadCurve(a.gamma);
  }
  if (!sm_curve_monotone(r.get())) {
    std::cerr << "warning: input curve R is not monotone; bounds are still computed\n";
  }
  const sm_service_options o{a.alpha, a.t, 0.0, ParseBackend(a.backend)};
  sm_curve *lo = nullptr, *hi = nullptr;
  Check(sm_service_bounds(r.get(), beta.get(), gamma.get(), &o, &lo, &hi));
  Curve lower(lo), upper(hi);
  if (!a.lower_out.empty()) Check(sm_curve_write_csv(lower.get(), a.lower_out.c_str()));
  if (!a.upper_out.empty()) Check(sm_curve_write_csv(upper.get(), a.upper_out.c_str()));
  std::string text = "T,R,lower,upper\n";
  const double* ts = sm_curve_times(lower.get());
  const double* rv = sm_curve_values(r.get());
  const double* lv = sm_curve_values(lower.get());
  const double* uv = sm_curve_values(upper.get());
  for (std::size_t i = 0; i < sm_curve_size(lower.get()); ++i) {
    text += Num(ts[i]) + "," + Num(rv[i]) + "," + Num(lv[i]) + "," + Num(uv[i]) + "\n";
  }
  Emit(text, a.out);
}

void DiscretizeCommand(const std::vector<double>& coeffs, bool example, double t_max,
                       std::size_t n, const std::string& out) {
  static constexpr double kExample[] = {0.0,     1.6738,   -0.7492,   -0.08694,
                                        0.1085, -0.01101, -0.001579, 0.0002085};
  const double* data = example ? kExample : coeffs.data();
  const std::size_t count = example ? std::size(kExample) : coeffs.size();
  if (count == 0) throw Failure{SM_ERR_INVALID_ARGUMENT, "--coeffs or --example is required"};
  sm_curve* c = nullptr;
  Check(sm_discretize(data, count, t_max, n, &c));
  Curve curve(c);
  sm_text* t = nullptr;
  Check(sm_curve_format_csv(curve.get(), &t));
  Text owned(t);
  Emit(sm_text_data(t), out);
}

void Amoeba(const std::string& path, double umin, double umax, std::size_t samples,
            const std::string& out) {
  auto v = Load(path);
  sm_text* t = nullptr;
  Check(sm_amoeba_csv(v.get(), umin, umax, samples, &t));
  Text owned(t);
  Emit(sm_text_data(t), out);
}

void Tropical(const std::string& path, const std::string& out) {
  auto v = Load(path);
  std::int64_t poly[6] = {};
  std::size_t count = 0;
  int degenerate = 0;
  Check(sm_newton_polygon(v.get(), poly, &count, &degenerate));
  json j;
  json verts = json::array();
  for (std::size_t i = 0; i < count; ++i) verts.push_back({poly[2 * i], poly[2 * i + 1]});
  j["newton_polygon"] = verts;
  j["degenerate"] = degenerate != 0;
  if (!degenerate) {
    std::int64_t rays[6] = {};
    Check(sm_trop_rays(v.get(), rays));
    json rj = json::array();
    for (int i = 0; i < 3; ++i) rj.push_back({rays[2 * i], rays[2 * i + 1]});
    j["rays"] = rj;
  }
  sm_line lines[2];
  Check(sm_tentacle_lines(v.get(), lines));
  json lj = json::array();
  for (const auto& l : lines) {
    lj.push_back({{"kind", l.vertical ? "VERTICAL" : "SLOPE_INTERCEPT"},
                  {"slope", l.slope},
                  {"intercept", l.intercept},
                  {"label", l.min_tentacle ? "MIN_TENTACLE" : "MAX_TENTACLE"}});
  }
  j["tentacle_lines"] = lj;
  EmitJson(j, out);
}

void Tentacles(const std::string& path, const std::string& out) {
  auto v = Load(path);
  sm_text* t = nullptr;
  Check(sm_tentacles_csv(v.get(), &t));
  Text owned(t);
  Emit(sm_text_data(t), out);
}

struct ExperimentArgs {
  std::string kind, delta_rule = "one", out;
  int M = 50, n_max = 50, reps = 10, g_steps = 20, eps_steps = 20;
  std::uint64_t seed = 42;
};

void Experiment(const ExperimentArgs& a) {
  sm_experiment_config c;
  sm_experiment_config_init(&c);
  if (a.kind == "integer") c.kind = SM_EXPERIMENT_INTEGER;
  else if (a.kind == "uniform") c.kind = SM_EXPERIMENT_UNIFORM;
  else if (a.kind == "cluster") c.kind = SM_EXPERIMENT_CLUSTER;
  else throw Failure{SM_ERR_INVALID_ARGUMENT, "unknown experiment '" + a.kind + "'"};
  if (a.delta_rule == "one") c.delta_rule = SM_DELTA_ONE;
  else if (a.delta_rule == "exp1") c.delta_rule = SM_DELTA_EXP1;
  else if (a.delta_rule == "inv-n") c.delta_rule = SM_DELTA_INV_N;
  else if (a.delta_rule == "hundredth") c.delta_rule = SM_DELTA_HUNDREDTH;
  else throw Failure{SM_ERR_INVALID_ARGUMENT, "unknown delta rule '" + a.delta_rule + "'"};
  c.M = a.M;
  c.n_max = a.n_max;
  c.reps = a.reps;
  c.g_steps = a.g_steps;
  c.eps_steps = a.eps_steps;
  c.seed = a.seed;
  c.threads = ThreadsFromEnvironment();
  sm_text* t = nullptr;
  Check(sm_run_experiment(&c, &t));
  Text owned(t);
  Emit(sm_text_data(t), a.out);
}

void TStar(const std::string& path, const std::string& method, double delta) {
  auto v = Load(path);
  sm_method m;
  if (method == "L") m = SM_METHOD_L;
  else if (method == "R") m = SM_METHOD_R;
  else throw Failure{SM_ERR_INVALID_ARGUMENT, "method must be L or R"};
  double t = 0;
  Check(sm_find_tstar(v.get(), m, delta, &t));
  EmitJson({{"method", method}, {"value", t}, {"t", t}, {"certified", false},
            {"error_bound", nullptr}},
           "");
}

void AddConvOptions(CLI::App* cmd, ConvArgs& a) {
  cmd->add_option("a", a.a, "First vector file")->required();
  cmd->add_option("b", a.b, "Second vector file")->required();
  cmd->add_option("--algorithm", a.algorithm, "L (log-sum-exp) or D (difference)")
      ->check(CLI::IsMember({"L", "D"}));
  cmd->add_option("--t", a.t, "Evaluation point t* (default depends on the algorithm)");
  cmd->add_option("--alpha", a.alpha, "Step ratio alpha* for D (default 2)");
  cmd->add_option("--backend", a.backend, "auto, fft, exact or direct")->check(CLI::IsMember(kBackends));
  cmd->add_flag("--certify", a.certify, "Exit with status 2 unless the result is certified");
  cmd->add_flag("--nearest", a.nearest, "Round to nearest instead of floor/ceil");
  cmd->add_flag("--float", a.real_valued, "Real-valued input: report smooth values, no rounding");
  cmd->add_option("--delta", a.delta, "Audit tolerance for --float (default 1e-3)");
  cmd->add_flag("--json", a.json_out, "JSON output");
  cmd->add_flag("--exact-sums", a.exact_sums, "Include exact power sums in JSON when available");
  cmd->add_option("--out", a.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth maximum approximations, certified recovery and max-plus convolution"};
  app.require_subcommand(1);
  int code = 0;

  std::string path, out;
  auto* summarize = app.add_subcommand("summarize", "Exact summary of a vector (JSON)");
  summarize->add_option("file", path, "Vector file")->required();
  summarize->add_option("--out", out, "Output file");
  summarize->callback([&] { Summarize(path, out); });

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a smooth maximum approximation");
  eval->add_option("file", ev.path, "Vector file")->required();
  eval->add_option("--method", ev.method, "L, R, Rk, D, pnorm or contour")
      ->check(CLI::IsMember({"L", "R", "Rk", "D", "pnorm", "contour"}));
  eval->add_option("--t", ev.t, "Evaluation point t (the exponent p for pnorm)");
  eval->add_option("--k", ev.k, "Derivative order for Rk and contour");
  eval->add_option("--alpha", ev.alpha, "Step ratio for D");
  eval->add_option("--r", ev.r, "Contour radius");
  eval->add_option("--points", ev.points, "Contour quadrature points");
  eval->add_flag("--json", ev.json_out, "JSON output");
  eval->callback([&] { Eval(ev); });

  BoundArgs bd;
  auto* bound = app.add_subcommand("bound", "Smallest t guaranteed by a convergence bound");
  bound->add_option("--theorem", bd.theorem, "L, R, D or pnorm")
      ->check(CLI::IsMember({"L", "R", "D", "pnorm"}));
  bound->add_option("--n", bd.n, "Vector length")->required();
  bound->add_option("--mu", bd.mu, "Multiplicity of the maximum");
  bound->add_option("--g2", bd.g2, "Lower bound on the gap below the maximum");
  bound->add_option("--delta", bd.delta, "Target accuracy");
  bound->add_option("--alpha", bd.alpha, "Step ratio (D)");
  bound->add_option("--m-upper", bd.m_upper, "Upper estimate of the maximum (pnorm)");
  bound->callback([&] { Bound(bd); });

  bool second = false;
  auto* certify = app.add_subcommand("certify", "Certified maximum and multiplicity");
  certify->add_option("file", path, "Vector file (integers)")->required();
  certify->add_flag("--second", second, "Also estimate the second largest value");
  certify->callback([&] { Certify(path, second); });

  double t_comb = 10.0;
  auto* combined = app.add_subcommand("combined", "Combined higher-order maximum and gap");
  combined->add_option("file", path, "Vector file")->required();
  combined->add_option("--t", t_comb, "Evaluation point");
  combined->callback([&] { Combined(path, t_comb); });

  int rank = 4;
  auto* stirling = app.add_subcommand("stirling", "Print the Stirling change-of-basis matrix");
  stirling->add_option("--r", rank, "Matrix size");
  stirling->callback([&] { Stirling(rank); });

  ConvArgs mx, mn;
  auto* maxconv = app.add_subcommand("maxconv", "Max-plus convolution");
  AddConvOptions(maxconv, mx);
  maxconv->callback([&] { code = MaxConv(mx, false); });
  auto* minconv = app.add_subcommand("minconv", "Min-plus convolution");
  AddConvOptions(minconv, mn);
  minconv->callback([&] { code = MaxConv(mn, true); });

  std::string cx, cy, cbackend = "fft";
  auto* conv = app.add_subcommand("conv", "Classical convolution of nonnegative vectors");
  conv->add_option("x", cx, "First vector file")->required();
  conv->add_option("y", cy, "Second vector file")->required();
  conv->add_option("--backend", cbackend, "fft, exact or direct")->check(CLI::IsMember(kBackends));
  conv->callback([&] { Conv(cx, cy, cbackend); });

  bool no_full = false, mcsp_json = false;
  double mcsp_t = 0;
  auto* mcsp = app.add_subcommand("mcsp", "Maximum consecutive subsums by window length");
  mcsp->add_option("file", path, "Vector file")->required();
  mcsp->add_flag("--no-full-sum", no_full, "Omit the full-length sum");
  mcsp->add_option("--t", mcsp_t, "Evaluation point for real-valued input");
  mcsp->add_flag("--json", mcsp_json, "JSON output");
  mcsp->callback([&] { McspCommand(path, no_full, mcsp_t, mcsp_json); });

  ServiceArgs sv;
  auto* service = app.add_subcommand("servicecurve", "Service-curve bounds by min-plus convolution");
  service->add_option("--r", sv.r, "Input curve CSV (T,value)");
  service->add_option("--beta", sv.beta, "Minimum service curve CSV");
  service->add_option("--gamma", sv.gamma, "Maximum service curve CSV");
  service->add_flag("--example", sv.example, "Use the built-in example curves");
  service->add_option("--n", sv.n, "Samples for --example");
  service->add_option("--tmax", sv.t_max, "Horizon for --example");
  service->add_option("--alpha", sv.alpha, "Step ratio (default 1.01)");
  service->add_option("--t", sv.t, "Small base t in (0,1) (default (1/(N-1))^25)");
  service->add_option("--backend", sv.backend, "auto, fft, exact or direct")
      ->check(CLI::IsMember(kBackends));
  service->add_option("--out", sv.out, "Output CSV (T,R,lower,upper)");
  service->add_option("--lower", sv.lower_out, "Also write the lower bound (T,value)");
  service->add_option("--upper", sv.upper_out, "Also write the upper bound (T,value)");
  service->callback([&] { Service(sv); });

  std::vector<double> coeffs;
  bool disc_example = false;
  double disc_tmax = 10.0;
  std::size_t disc_n = 100;
  auto* discretize = app.add_subcommand("discretize", "Sample a polynomial on a uniform grid");
  discretize->add_option("--coeffs", coeffs, "Ascending coefficients c0,c1,...")->delimiter(',');
  discretize->add_flag("--example", disc_example, "Use the built-in input curve");
  discretize->add_option("--tmax", disc_tmax, "Horizon");
  discretize->add_option("--n", disc_n, "Number of samples");
  discretize->add_option("--out", out, "Output CSV");
  discretize->callback([&] { DiscretizeCommand(coeffs, disc_example, disc_tmax, disc_n, out); });

  double umin = -1, umax = 5;
  std::size_t samples = 200;
  auto* amoeba = app.add_subcommand("amoeba", "Upper amoeba boundary samples (u,s)");
  amoeba->add_option("file", path, "Vector file")->required();
  amoeba->add_option("--umin", umin, "Smallest u");
  amoeba->add_option("--umax", umax, "Largest u");
  amoeba->add_option("--samples", samples, "Number of samples");
  amoeba->add_option("--out", out, "Output CSV");
  amoeba->callback([&] { Amoeba(path, umin, umax, samples, out); });

  auto* tropical = app.add_subcommand("tropical", "Newton polygon, rays and tentacle lines (JSON)");
  tropical->add_option("file", path, "Vector file (integers)")->required();
  tropical->add_option("--out", out, "Output file");
  tropical->callback([&] { Tropical(path, out); });

  auto* tentacles = app.add_subcommand("tentacles", "Tentacle lines as CSV");
  tentacles->add_option("file", path, "Vector file (integers)")->required();
  tentacles->add_option("--out", out, "Output CSV");
  tentacles->callback([&] { Tentacles(path, out); });

  ExperimentArgs ex;
  auto* experiment = app.add_subcommand("experiment", "Seeded comparison experiments (CSV)");
  experiment->add_option("kind", ex.kind, "integer, uniform or cluster")
      ->required()
      ->check(CLI::IsMember({"integer", "uniform", "cluster"}));
  experiment->add_option("--M", ex.M, "Maximum for the integer experiment");
  experiment->add_option("--nmax", ex.n_max, "Largest vector length");
  experiment->add_option("--reps", ex.reps, "Repetitions per cell");
  experiment->add_option("--seed", ex.seed, "Random seed");
  experiment->add_option("--delta-rule", ex.delta_rule, "one, exp1, inv-n or hundredth")
      ->check(CLI::IsMember({"one", "exp1", "inv-n", "hundredth"}));
  experiment->add_option("--g-steps", ex.g_steps, "Cluster gap grid size");
  experiment->add_option("--eps-steps", ex.eps_steps, "Cluster noise grid size");
  experiment->add_option("--out", ex.out, "Output CSV");
  experiment->callback([&] { Experiment(ex); });

  std::string ts_method = "L";
  double ts_delta = 1.0;
  auto* tstar = app.add_subcommand("tstar", "First t reaching a target accuracy");
  tstar->add_option("file", path, "Vector file")->required();
  tstar->add_option("--method", ts_method, "L or R")->check(CLI::IsMember({"L", "R"}));
  tstar->add_option("--delta", ts_delta, "Absolute tolerance");
  tstar->callback([&] { TStar(path, ts_method, ts_delta); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << " [" << sm_status_name(f.status) << "]\n";
    return ExitCodeFor(f.status);
  }
  return code;
}
