// sphgreen: tabulate the Green function of (Δ* + a) on S^n, extract its
// Gegenbauer coefficients and run the self-validation suite.
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphgreen/sphgreen.h"

namespace {

using json = nlohmann::json;

constexpr int kExitRowError = 1;
constexpr int kExitUsage = 2;

struct CliError {
  std::string kind;
  std::string message;
};

struct SphereHandle {
  sg_sphere* s = nullptr;
  ~SphereHandle() { sg_sphere_destroy(s); }
};

struct ParamHandle {
  sg_param* p = nullptr;
  ~ParamHandle() { sg_param_destroy(p); }
};

[[noreturn]] void raise(sg_status st) { throw CliError{sg_status_name(st), sg_last_error()}; }

void check(sg_status st) {
  if (st != SG_OK) raise(st);
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

unsigned worker_count() {
  if (const char* env = std::getenv("THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw CliError{"ParameterError", std::string("THREADS must be a positive integer, got '") +
                                         env + "'"};
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs task(i) for i in [0, count) on the worker pool.
template <class Task>
void parallel_for(std::size_t count, const Task& task) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next++; i < count; i = next++) task(i);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(loop);
  loop();
  for (auto& t : pool) t.join();
}

struct Common {
  int n = 2;
  std::optional<double> a;
  std::optional<double> L;
  int lmax = 2000;
  double tol = 1e-10;
  std::string output;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "sphere dimension (n >= 2)")->required();
  auto* oa = cmd->add_option("--a", c.a, "Helmholtz shift a");
  auto* oL = cmd->add_option("--L", c.L, "root L of a = L(n+L-1)");
  oa->excludes(oL);
  oL->excludes(oa);
  cmd->add_option("--lmax", c.lmax, "series truncation / highest admissible degree")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol", c.tol, "quadrature tolerance")->capture_default_str();
  cmd->add_option("--output", c.output, "write to file instead of stdout");
  cmd->add_option("--format", c.format, "csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
}

void open_problem(const Common& c, SphereHandle& sphere, ParamHandle& param) {
  if (!c.a && !c.L) {
    throw CliError{"ParameterError", "one of --a or --L is required"};
  }
  check(sg_sphere_create(c.n, &sphere.s));
  check(c.a ? sg_param_from_a(sphere.s, *c.a, &param.p) : sg_param_from_L(sphere.s, *c.L, &param.p));
}

sg_options options_of(const Common& c) {
  sg_options o;
  sg_options_default(&o);
  o.tol = c.tol;
  o.lmax = c.lmax;
  return o;
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw CliError{"ParameterError", "cannot open " + c.output + " for writing"};
  f << text;
}

// ---- eval ----------------------------------------------------------------

struct EvalSpec {
  Common common;
  std::optional<double> theta;
  std::optional<double> theta_min;
  std::optional<double> theta_max;
  int theta_steps = 1;
  std::string method = "integral";
  bool raw = false;
};

struct Row {
  double theta = 0.0;
  std::string method;
  bool ok = false;
  double value = 0.0;
  double error_estimate = 0.0;
  long work = 0;
  std::string error_kind;
  std::string error_message;
};

std::vector<double> theta_grid(const EvalSpec& s) {
  const bool range = s.theta_min || s.theta_max;
  if (s.theta && range) {
    throw CliError{"ParameterError", "give either --theta or a --theta-min/--theta-max range"};
  }
  std::vector<double> grid;
  if (s.theta) {
    grid.push_back(*s.theta);
  } else if (s.theta_min && s.theta_max) {
    if (s.theta_steps < 1) throw CliError{"ParameterError", "--theta-steps must be >= 1"};
    if (*s.theta_max < *s.theta_min) {
      throw CliError{"ParameterError", "--theta-max must not be below --theta-min"};
    }
    const int k = s.theta_steps;
    for (int i = 0; i < k; ++i) {
      grid.push_back(k == 1 ? *s.theta_min
                            : *s.theta_min + (*s.theta_max - *s.theta_min) * i / (k - 1));
    }
  } else {
    throw CliError{"ParameterError", "need --theta or both --theta-min and --theta-max"};
  }
  for (double& th : grid) {
    // Accept π typed to a few digits too many.
    if (th > std::numbers::pi && th <= std::numbers::pi * (1.0 + 1e-12)) th = std::numbers::pi;
    if (!(th > 0.0 && th <= std::numbers::pi)) {
      throw CliError{"DomainError", "theta must lie in (0, pi], got " + num(th) +
                                        " (G is singular at theta = 0)"};
    }
  }
  return grid;
}

std::vector<sg_method> methods_for(const std::string& name, const sg_sphere* sphere,
                                   const sg_param* param) {
  if (name == "series") return {SG_METHOD_SERIES};
  if (name == "integral") return {SG_METHOD_INTEGRAL};
  if (name == "appell") return {SG_METHOD_APPELL};
  sg_param_info info;
  check(sg_param_get_info(param, &info));
  int n = 0;
  check(sg_sphere_info(sphere, &n, nullptr, nullptr));
  std::vector<sg_method> out{SG_METHOD_SERIES};
  if (info.kind != SG_KIND_COMPLEX_L && !info.excluded) out.push_back(SG_METHOD_INTEGRAL);
  if (info.kind == SG_KIND_NONRESONANT && !info.excluded && info.L > 1.0 - n && info.L < 0.0) {
    out.push_back(SG_METHOD_APPELL);
  }
  return out;
}

const char* method_label(sg_method m) {
  switch (m) {
    case SG_METHOD_SERIES: return "series";
    case SG_METHOD_INTEGRAL: return "integral";
    case SG_METHOD_APPELL: return "appell";
  }
  return "?";
}

std::string render_eval(const std::vector<Row>& rows, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json o{{"theta", r.theta}, {"t", std::cos(r.theta)}, {"method", r.method}};
      if (r.ok) {
        o["value"] = r.value;
        o["error_estimate"] = r.error_estimate;
        o["work"] = r.work;
      } else {
        o["value"] = "ERROR:" + r.error_kind;
        o["error_estimate"] = nullptr;
        o["work"] = nullptr;
        o["message"] = r.error_message;
      }
      arr.push_back(std::move(o));
    }
    os << arr.dump(2) << "\n";
    return os.str();
  }
  os << "theta,t,method,value,error_estimate,work\n";
  for (const auto& r : rows) {
    os << num(r.theta) << ',' << num(std::cos(r.theta)) << ',' << r.method << ',';
    if (r.ok) {
      os << num(r.value) << ',' << num(r.error_estimate) << ',' << r.work << '\n';
    } else {
      os << "ERROR:" << r.error_kind << ",,\n";
    }
  }
  return os.str();
}

int run_eval(const EvalSpec& spec) {
  SphereHandle sphere;
  ParamHandle param;
  open_problem(spec.common, sphere, param);
  const auto grid = theta_grid(spec);
  const auto methods = methods_for(spec.method, sphere.s, param.p);
  sg_options opts = options_of(spec.common);
  opts.abel = spec.raw ? 0 : 1;

  const std::size_t per = methods.size();
  std::vector<Row> cells(grid.size() * per);
  parallel_for(cells.size(), [&](std::size_t i) {
    Row& row = cells[i];
    row.theta = grid[i / per];
    const sg_method m = methods[i % per];
    row.method = method_label(m);
    sg_green_result res;
    const sg_status st = sg_green_eval(sphere.s, param.p, m, row.theta, &opts, &res);
    if (st == SG_OK) {
      row.ok = true;
      row.value = res.value;
      row.error_estimate = res.error_estimate;
      row.work = res.work;
    } else {
      row.error_kind = sg_status_name(st);
      row.error_message = sg_last_error();
    }
  });

  std::vector<Row> rows;
  bool any_error = false;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double worst = 0.0;
    double budget = 0.0;
    bool all_ok = true;
    for (std::size_t j = 0; j < per; ++j) {
      const Row& r = cells[g * per + j];
      rows.push_back(r);
      if (!r.ok) {
        all_ok = false;
        any_error = true;
        std::cerr << "theta=" << num(r.theta) << " " << r.method << ": " << r.error_kind << ": "
                  << r.error_message << "\n";
      }
    }
    if (spec.method == "all" && per > 1 && all_ok) {
      for (std::size_t j = 0; j < per; ++j) {
        for (std::size_t k = j + 1; k < per; ++k) {
          const Row& x = cells[g * per + j];
          const Row& y = cells[g * per + k];
          const double d = std::abs(x.value - y.value);
          if (d >= worst) {
            worst = d;
            budget = x.error_estimate + y.error_estimate;
          }
        }
      }
      Row m;
      m.theta = grid[g];
      m.method = "max_discrepancy";
      m.ok = true;
      m.value = worst;
      m.error_estimate = budget;
      rows.push_back(m);
    }
  }
  emit(spec.common, render_eval(rows, spec.common.format));
  return any_error ? kExitRowError : 0;
}

// ---- modes ---------------------------------------------------------------

struct ModesSpec {
  Common common;
  std::vector<int> degrees;
  int nodes = 0;
  std::string method = "integral";
};

struct ModeRow {
  int l = 0;
  bool ok = false;
  bool omitted = false;
  double extracted = 0.0;
  double exact = 0.0;
  std::string error_kind;
  std::string error_message;
};

int run_modes(const ModesSpec& spec) {
  SphereHandle sphere;
  ParamHandle param;
  open_problem(spec.common, sphere, param);
  sg_param_info info;
  check(sg_param_get_info(param.p, &info));
  sg_options opts = options_of(spec.common);
  sg_method method = SG_METHOD_INTEGRAL;
  if (spec.method == "series") method = SG_METHOD_SERIES;
  if (spec.method == "appell") method = SG_METHOD_APPELL;

  std::vector<int> degrees = spec.degrees;
  if (degrees.empty()) {
    for (int l = 0; l <= 10; ++l) degrees.push_back(l);
  }
  std::vector<ModeRow> rows(degrees.size());
  std::vector<int> supported;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    rows[i].l = degrees[i];
    if (degrees[i] < 0) {
      rows[i].error_kind = "ParameterError";
      rows[i].error_message = "degree must be >= 0";
    } else if (degrees[i] > spec.common.lmax) {
      rows[i].error_kind = "AccuracyError";
      rows[i].error_message = "degree " + std::to_string(degrees[i]) +
                              " is beyond the resolved band l <= " +
                              std::to_string(spec.common.lmax) + " (raise --lmax)";
    } else {
      supported.push_back(degrees[i]);
    }
  }
  int top = 0;
  for (int l : supported) top = std::max(top, l);
  const int nodes = spec.nodes > 0 ? spec.nodes : std::max(256, 2 * top + 16);

  // One extraction call per degree keeps a failing degree from hiding the others.
  std::vector<double> values(supported.size());
  std::vector<sg_status> status(supported.size(), SG_OK);
  std::vector<std::string> messages(supported.size());
  parallel_for(supported.size(), [&](std::size_t i) {
    status[i] = sg_green_coefficients(sphere.s, param.p, method, &supported[i], 1, nodes, &opts,
                                      &values[i]);
    if (status[i] != SG_OK) messages[i] = sg_last_error();
  });

  std::size_t k = 0;
  bool any_error = false;
  for (auto& row : rows) {
    if (!row.error_kind.empty()) {
      any_error = true;
      continue;
    }
    const std::size_t i = k++;
    if (status[i] != SG_OK) {
      row.error_kind = sg_status_name(status[i]);
      row.error_message = messages[i];
      any_error = true;
      continue;
    }
    row.ok = true;
    row.extracted = values[i];
    row.omitted = row.l == info.omitted_mode;
    check(sg_green_coefficient_exact(sphere.s, param.p, row.l, &row.exact));
  }
  for (const auto& row : rows) {
    if (!row.ok) std::cerr << "l=" << row.l << ": " << row.error_kind << ": " << row.error_message << "\n";
  }

  std::ostringstream os;
  auto rel = [](const ModeRow& r) { return std::abs(r.extracted - r.exact) / std::abs(r.exact); };
  if (spec.common.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json o{{"l", r.l}};
      if (!r.ok) {
        o["extracted"] = "ERROR:" + r.error_kind;
        o["exact"] = nullptr;
        o["rel_err"] = nullptr;
        o["message"] = r.error_message;
      } else if (r.omitted) {
        o["extracted"] = r.extracted;
        o["exact"] = "omitted (l=L)";
        o["rel_err"] = nullptr;
      } else {
        o["extracted"] = r.extracted;
        o["exact"] = r.exact;
        o["rel_err"] = rel(r);
      }
      arr.push_back(std::move(o));
    }
    os << arr.dump(2) << "\n";
  } else {
    os << "l,extracted,exact,rel_err\n";
    for (const auto& r : rows) {
      os << r.l << ',';
      if (!r.ok) {
        os << "ERROR:" << r.error_kind << ",,\n";
      } else if (r.omitted) {
        os << num(r.extracted) << ",omitted (l=L),\n";
      } else {
        os << num(r.extracted) << ',' << num(r.exact) << ',' << num(rel(r)) << '\n';
      }
    }
  }
  emit(spec.common, os.str());
  return any_error ? kExitRowError : 0;
}

// ---- selftest ------------------------------------------------------------

struct SelftestSpec {
  std::optional<std::string> filter;
  double tol = 0.0;
  std::string format = "text";
};

std::vector<int> select_criteria(const std::string& filter) {
  std::vector<int> ids;
  std::stringstream ss(filter);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      const int id = std::stoi(tok, &used);
      if (used == tok.size()) {
        if (id < 1 || static_cast<std::size_t>(id) > sg_criterion_count()) {
          throw CliError{"ParameterError", "no criterion " + tok};
        }
        ids.push_back(id);
        continue;
      }
    } catch (const std::invalid_argument&) {
    }
    throw CliError{"ParameterError", "criterion filter expects ids 1.." +
                                         std::to_string(sg_criterion_count()) + ", got '" + tok +
                                         "'"};
  }
  return ids;
}

int run_selftest(const SelftestSpec& spec) {
  std::vector<int> ids;
  if (spec.filter) {
    ids = select_criteria(*spec.filter);
    if (ids.empty()) {
      std::cout << "no criteria selected\n";
      return 0;
    }
  } else {
    for (std::size_t i = 1; i <= sg_criterion_count(); ++i) ids.push_back(static_cast<int>(i));
  }
  struct Sink {
    bool json_out;
    json arr = json::array();
  } sink{spec.format == "json"};
  auto cb = [](const sg_criterion_report* r, void* user) {
    auto* s = static_cast<Sink*>(user);
    if (s->json_out) {
      s->arr.push_back({{"id", r->id},
                        {"name", r->name},
                        {"passed", r->passed != 0},
                        {"measured", std::isnan(r->measured) ? json(nullptr) : json(r->measured)},
                        {"threshold", r->threshold},
                        {"detail", r->detail}});
    } else {
      std::printf("[%s] criterion %d %-22s %s\n", r->passed ? "PASS" : "FAIL", r->id, r->name,
                  r->detail);
      std::fflush(stdout);
    }
  };
  int failed = 0;
  check(sg_selftest(ids.data(), ids.size(), spec.tol, cb, &sink, &failed));
  if (sink.json_out) {
    std::cout << sink.arr.dump(2) << "\n";
  } else {
    std::printf("%zu/%zu criteria passed\n", ids.size() - static_cast<std::size_t>(failed),
                ids.size());
  }
  return failed == 0 ? 0 : kExitRowError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green function of the shifted Laplace-Beltrami operator on the unit n-sphere"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sg_version()));

  EvalSpec eval;
  auto* ev = app.add_subcommand("eval", "tabulate G(cos theta) by one or more methods");
  add_common(ev, eval.common);
  ev->add_option("--theta", eval.theta, "single angle in (0, pi]");
  ev->add_option("--theta-min", eval.theta_min);
  ev->add_option("--theta-max", eval.theta_max);
  ev->add_option("--theta-steps", eval.theta_steps)->capture_default_str();
  ev->add_option("--method", eval.method, "series, integral, appell or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"series", "integral", "appell", "all"}));
  ev->add_flag("--raw", eval.raw, "series: plain partial sum through lmax, no Abel extrapolation");

  ModesSpec modes;
  auto* md = app.add_subcommand("modes", "extract Gegenbauer coefficients g_l of G");
  add_common(md, modes.common);
  md->add_option("--l", modes.degrees, "degrees to extract (default 0..10)")->delimiter(',');
  md->add_option("--nodes", modes.nodes, "quadrature nodes (default max(256, 2 l + 16))");
  md->add_option("--method", modes.method, "route used to evaluate G")
      ->capture_default_str()
      ->check(CLI::IsMember({"series", "integral", "appell"}));

  SelftestSpec st;
  auto* sf = app.add_subcommand("selftest", "run the acceptance criteria");
  sf->add_option("--filter", st.filter, "comma-separated criterion ids; empty selects none")
      ->expected(0, 1);
  sf->add_option("--tol", st.tol, "quadrature tolerance (default 1e-12)");
  sf->add_option("--format", st.format)->capture_default_str()->check(
      CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (ev->parsed()) return run_eval(eval);
    if (md->parsed()) return run_modes(modes);
    if (sf->parsed()) return run_selftest(st);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.kind << ": " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
