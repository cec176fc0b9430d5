#include "sphgreen/sphgreen.h"

#include <algorithm>
#include <complex>
#include <exception>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "sphgreen/appell.hpp"
#include "sphgreen/error.hpp"
#include "sphgreen/gegenbauer.hpp"
#include "sphgreen/green_integral.hpp"
#include "sphgreen/green_series.hpp"
#include "sphgreen/kernel.hpp"
#include "sphgreen/solver.hpp"
#include "sphgreen/sphere_params.hpp"
#include "sphgreen/validation.hpp"

struct sg_sphere {
  sphgreen::SphereContext ctx;
};

struct sg_param {
  int n;
  sphgreen::HelmholtzParameter p;
};

namespace {

thread_local std::string g_last_error;

sg_status status_of(sphgreen::ErrorKind kind) {
  using K = sphgreen::ErrorKind;
  switch (kind) {
    case K::Dimension: return SG_ERR_DIMENSION;
    case K::Domain: return SG_ERR_DOMAIN;
    case K::Parameter: return SG_ERR_PARAMETER;
    case K::Accuracy: return SG_ERR_ACCURACY;
    case K::UnsupportedParameter: return SG_ERR_UNSUPPORTED;
    case K::ExcludedParameter: return SG_ERR_EXCLUDED;
    case K::Precondition: return SG_ERR_PRECONDITION;
    case K::Compatibility: return SG_ERR_COMPATIBILITY;
    case K::Internal: return SG_ERR_INTERNAL;
  }
  return SG_ERR_INTERNAL;
}

sg_status fail(sg_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
sg_status guard(F&& body) {
  g_last_error.clear();
  try {
    body();
    return SG_OK;
  } catch (const sphgreen::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SG_ERR_INTERNAL, "unknown exception");
  }
}

sphgreen::QuadratureConfig quadrature_of(const sg_options* o) {
  sphgreen::QuadratureConfig qc;
  if (o != nullptr) {
    qc.tol = o->tol;
    qc.max_levels = o->max_levels;
    qc.scheme = o->scheme == SG_SCHEME_GAUSS_KRONROD
                    ? sphgreen::QuadratureScheme::AdaptiveGaussKronrod
                    : sphgreen::QuadratureScheme::TanhSinh;
  }
  return qc;
}

void check_pair(const sg_sphere* s, const sg_param* p) {
  if (s->ctx.n != p->n) {
    throw sphgreen::ParameterError("parameter handle was built for n = " + std::to_string(p->n) +
                                   ", sphere has n = " + std::to_string(s->ctx.n));
  }
}

sphgreen::GreenEvaluation evaluate(const sg_sphere* s, const sg_param* p, sg_method method,
                                   double theta, const sg_options* opts) {
  const auto qc = quadrature_of(opts);
  switch (method) {
    case SG_METHOD_SERIES: {
      sg_options d;
      sg_options_default(&d);
      const sg_options& o = opts != nullptr ? *opts : d;
      if (o.abel != 0) {
        return sphgreen::green_series(s->ctx, p->p, theta, o.lmax);
      }
      return sphgreen::green_series(s->ctx, p->p, theta, o.lmax, {});
    }
    case SG_METHOD_INTEGRAL: return sphgreen::green_integral(s->ctx, p->p, theta, qc);
    case SG_METHOD_APPELL: return sphgreen::green_appell(s->ctx, p->p, theta, qc);
  }
  throw sphgreen::ParameterError("unknown method");
}

sphgreen::F1Arguments f1_args(double alpha, double beta, double beta_prime, double gamma,
                              double x_re, double x_im, double y_re, double y_im) {
  return {alpha, beta, beta_prime, gamma, {x_re, x_im}, {y_re, y_im}};
}

}  // namespace

#define SG_REQUIRE(cond)                                                    \
  do {                                                                      \
    if (!(cond)) return fail(SG_ERR_NULL_ARGUMENT, "null argument: " #cond); \
  } while (0)

extern "C" {

const char* sg_version(void) { return "0.1.0"; }

const char* sg_status_name(sg_status status) {
  switch (status) {
    case SG_OK: return "Ok";
    case SG_ERR_DIMENSION: return "DimensionError";
    case SG_ERR_DOMAIN: return "DomainError";
    case SG_ERR_PARAMETER: return "ParameterError";
    case SG_ERR_ACCURACY: return "AccuracyError";
    case SG_ERR_UNSUPPORTED: return "UnsupportedParameter";
    case SG_ERR_EXCLUDED: return "ExcludedParameter";
    case SG_ERR_PRECONDITION: return "PreconditionError";
    case SG_ERR_COMPATIBILITY: return "CompatibilityError";
    case SG_ERR_INTERNAL: return "InternalError";
    case SG_ERR_NULL_ARGUMENT: return "NullArgument";
    case SG_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
  }
  return "UnknownStatus";
}

const char* sg_last_error(void) { return g_last_error.c_str(); }

void sg_options_default(sg_options* out) {
  if (out == nullptr) return;
  const sphgreen::QuadratureConfig qc;
  out->tol = qc.tol;
  out->max_levels = qc.max_levels;
  out->scheme = SG_SCHEME_TANH_SINH;
  out->lmax = 2000;
  out->abel = 1;
}

sg_status sg_sphere_create(int n, sg_sphere** out) {
  SG_REQUIRE(out != nullptr);
  *out = nullptr;
  return guard([&] { *out = new sg_sphere{sphgreen::make_context(n)}; });
}

void sg_sphere_destroy(sg_sphere* sphere) { delete sphere; }

sg_status sg_sphere_info(const sg_sphere* sphere, int* n, double* lambda, double* sigma) {
  SG_REQUIRE(sphere != nullptr);
  if (n != nullptr) *n = sphere->ctx.n;
  if (lambda != nullptr) *lambda = sphere->ctx.lambda;
  if (sigma != nullptr) *sigma = sphere->ctx.sigma;
  return SG_OK;
}

sg_status sg_param_from_a(const sg_sphere* sphere, double a, sg_param** out) {
  SG_REQUIRE(sphere != nullptr);
  SG_REQUIRE(out != nullptr);
  *out = nullptr;
  return guard(
      [&] { *out = new sg_param{sphere->ctx.n, sphgreen::params_from_a(sphere->ctx, a)}; });
}

sg_status sg_param_from_L(const sg_sphere* sphere, double L, sg_param** out) {
  SG_REQUIRE(sphere != nullptr);
  SG_REQUIRE(out != nullptr);
  *out = nullptr;
  return guard(
      [&] { *out = new sg_param{sphere->ctx.n, sphgreen::params_from_L(sphere->ctx, L)}; });
}

void sg_param_destroy(sg_param* param) { delete param; }

sg_status sg_param_get_info(const sg_param* param, sg_param_info* out) {
  SG_REQUIRE(param != nullptr);
  SG_REQUIRE(out != nullptr);
  const auto& p = param->p;
  out->a = p.a;
  out->L = p.L;
  out->L_prime = p.L_prime;
  out->L0 = p.L0;
  out->kind = static_cast<sg_kind>(static_cast<int>(p.kind));
  out->excluded = p.excluded ? 1 : 0;
  out->omitted_mode = p.resonant_mode();
  return SG_OK;
}

sg_status sg_green_eval(const sg_sphere* sphere, const sg_param* param, sg_method method,
                        double theta, const sg_options* opts, sg_green_result* out) {
  SG_REQUIRE(sphere != nullptr);
  SG_REQUIRE(param != nullptr);
  SG_REQUIRE(out != nullptr);
  return guard([&] {
    check_pair(sphere, param);
    const auto ev = evaluate(sphere, param, method, theta, opts);
    out->theta = ev.theta;
    out->value = ev.value;
    out->error_estimate = ev.error_estimate;
    out->work = ev.work;
    out->method = method;
  });
}

sg_status sg_green_coefficients(const sg_sphere* sphere, const sg_param* param, sg_method method,
                                const int* degrees, size_t count, int nodes,
                                const sg_options* opts, double* out) {
  SG_REQUIRE(sphere != nullptr);
  SG_REQUIRE(param != nullptr);
  SG_REQUIRE(count == 0 || (degrees != nullptr && out != nullptr));
  return guard([&] {
    check_pair(sphere, param);
    auto f = [&](double theta) { return evaluate(sphere, param, method, theta, opts).value; };
    const auto g = sphgreen::extract_green_coefficients(
        sphere->ctx, f, std::span<const int>(degrees, count),
        nodes > 0 ? nodes : sphgreen::kDefaultExtractionNodes);
    std::copy(g.begin(), g.end(), out);
  });
}

sg_status sg_green_coefficient_exact(const sg_sphere* sphere, const sg_param* param, int l,
                                     double* out) {
  SG_REQUIRE(sphere != nullptr);
  SG_REQUIRE(param != nullptr);
  SG_REQUIRE(out != nullptr);
  return guard([&] {
    check_pair(sphere, param);
    if (l < 0) throw sphgreen::ParameterError("degree must be >= 0");
    *out = l == param->p.resonant_mode() ? 0.0
                                         : sphgreen::green_coefficient(sphere->ctx, param->p.a, l);
  });
}

sg_status sg_gegenbauer(double lambda, double t, int lmax, double* out) {
  SG_REQUIRE(out != nullptr);
  return guard([&] {
    const auto seq = sphgreen::gegenbauer_eval(lambda, t, lmax);
    std::copy(seq.values.begin(), seq.values.end(), out);
  });
}

sg_status sg_poisson_kernel(const sg_sphere* sphere, double r, double t, double* out) {
  SG_REQUIRE(sphere != nullptr);
  SG_REQUIRE(out != nullptr);
  return guard([&] { *out = sphgreen::poisson_kernel_closed(sphere->ctx, r, t); });
}

sg_status sg_moment_identity(const sg_sphere* sphere, double L, int l, const sg_options* opts,
                             double* quadrature, double* exact) {
  SG_REQUIRE(sphere != nullptr);
  return guard([&] {
    const auto m = sphgreen::moment_identity(sphere->ctx, L, l, quadrature_of(opts));
    if (quadrature != nullptr) *quadrature = m.quadrature_value;
    if (exact != nullptr) *exact = m.exact_value;
  });
}

sg_status sg_solve_spectrum(const sg_sphere* sphere, const sg_param* param, const double* f,
                            size_t count, double* u) {
  SG_REQUIRE(sphere != nullptr);
  SG_REQUIRE(param != nullptr);
  SG_REQUIRE(count == 0 || (f != nullptr && u != nullptr));
  return guard([&] {
    check_pair(sphere, param);
    const sphgreen::ZonalSpectrum in{sphere->ctx.n, std::vector<double>(f, f + count)};
    const auto res = sphgreen::solve_spectrum(sphere->ctx, param->p, in);
    std::copy(res.coefficients.begin(), res.coefficients.end(), u);
  });
}

sg_status sg_apply_operator(const sg_sphere* sphere, double a, const double* u, size_t count,
                            double* f) {
  SG_REQUIRE(sphere != nullptr);
  SG_REQUIRE(count == 0 || (f != nullptr && u != nullptr));
  return guard([&] {
    const sphgreen::ZonalSpectrum in{sphere->ctx.n, std::vector<double>(u, u + count)};
    const auto res = sphgreen::apply_operator(sphere->ctx, a, in);
    std::copy(res.coefficients.begin(), res.coefficients.end(), f);
  });
}

sg_status sg_f1_series(double alpha, double beta, double beta_prime, double gamma, double x_re,
                       double x_im, double y_re, double y_im, double* out_re, double* out_im) {
  SG_REQUIRE(out_re != nullptr);
  SG_REQUIRE(out_im != nullptr);
  return guard([&] {
    const auto v = sphgreen::f1_double_series(
        f1_args(alpha, beta, beta_prime, gamma, x_re, x_im, y_re, y_im));
    *out_re = v.real();
    *out_im = v.imag();
  });
}

sg_status sg_f1_integral(double alpha, double beta, double beta_prime, double gamma, double x_re,
                         double x_im, double y_re, double y_im, const sg_options* opts,
                         double* out_re, double* out_im) {
  SG_REQUIRE(out_re != nullptr);
  SG_REQUIRE(out_im != nullptr);
  return guard([&] {
    const auto v = sphgreen::f1_integral(
        f1_args(alpha, beta, beta_prime, gamma, x_re, x_im, y_re, y_im), quadrature_of(opts));
    *out_re = v.real();
    *out_im = v.imag();
  });
}

size_t sg_criterion_count(void) { return sphgreen::criteria().size(); }

sg_status sg_selftest(const int* ids, size_t count, double tol, sg_criterion_callback cb,
                      void* user, int* failed) {
  SG_REQUIRE(ids != nullptr || count == 0);
  return guard([&] {
    std::vector<int> which;
    if (ids == nullptr) {
      for (const auto& c : sphgreen::criteria()) which.push_back(c.id);
    } else {
      which.assign(ids, ids + count);
    }
    auto qc = sphgreen::validation_quadrature();
    if (tol > 0.0) qc.tol = tol;
    int bad = 0;
    for (int id : which) {
      const auto r = sphgreen::run_criterion(id, qc);
      bad += r.passed ? 0 : 1;
      if (cb != nullptr) {
        const sg_criterion_report rep{r.id,       r.name.c_str(),   r.passed ? 1 : 0,
                                      r.measured, r.threshold,      r.detail.c_str()};
        cb(&rep, user);
      }
    }
    if (failed != nullptr) *failed = bad;
  });
}

}  // extern "C"
