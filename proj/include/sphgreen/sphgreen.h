/* C interface to the sphgreen library: Green function of (Δ* + a) on the
 * unit n-sphere, evaluated by Gegenbauer series, radial integral or the
 * Appell F1 closed form.
 *
 * Every function returns an sg_status. On failure a message describing the
 * error is available from sg_last_error() on the calling thread until the
 * next call into the library from that thread. */
#ifndef SPHGREEN_H
#define SPHGREEN_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SPHGREEN_BUILDING)
#    define SG_API __declspec(dllexport)
#  else
#    define SG_API __declspec(dllimport)
#  endif
#else
#  define SG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
  SG_OK = 0,
  SG_ERR_DIMENSION = 1,
  SG_ERR_DOMAIN = 2,
  SG_ERR_PARAMETER = 3,
  SG_ERR_ACCURACY = 4,
  SG_ERR_UNSUPPORTED = 5,
  SG_ERR_EXCLUDED = 6,
  SG_ERR_PRECONDITION = 7,
  SG_ERR_COMPATIBILITY = 8,
  SG_ERR_INTERNAL = 9,
  SG_ERR_NULL_ARGUMENT = 10,
  SG_ERR_BUFFER_TOO_SMALL = 11
} sg_status;

typedef enum sg_kind {
  SG_KIND_POISSON = 0,
  SG_KIND_NONRESONANT = 1,
  SG_KIND_RESONANT = 2,
  SG_KIND_COMPLEX_L = 3
} sg_kind;

typedef enum sg_method { SG_METHOD_SERIES = 0, SG_METHOD_INTEGRAL = 1, SG_METHOD_APPELL = 2 } sg_method;

typedef enum sg_scheme { SG_SCHEME_TANH_SINH = 0, SG_SCHEME_GAUSS_KRONROD = 1 } sg_scheme;

typedef struct sg_sphere sg_sphere;
typedef struct sg_param sg_param;

typedef struct sg_options {
  double tol;          /* quadrature tolerance relative to the integrand L1 norm */
  int max_levels;      /* tanh-sinh refinement levels */
  sg_scheme scheme;
  int lmax;            /* raw series truncation, used when abel == 0 */
  int abel;            /* nonzero: Abel summation with extrapolation (lmax ignored) */
} sg_options;

typedef struct sg_param_info {
  double a;
  double L;
  double L_prime;
  int L0;
  sg_kind kind;
  int excluded;
  int omitted_mode; /* -1 when every mode is present */
} sg_param_info;

typedef struct sg_green_result {
  double theta;
  double value;
  double error_estimate;
  long work;
  sg_method method;
} sg_green_result;

typedef struct sg_criterion_report {
  int id;
  const char* name;
  int passed;
  double measured;
  double threshold;
  const char* detail;
} sg_criterion_report;

typedef void (*sg_criterion_callback)(const sg_criterion_report* report, void* user);

SG_API const char* sg_version(void);
SG_API const char* sg_status_name(sg_status status);
SG_API const char* sg_last_error(void);

SG_API void sg_options_default(sg_options* out);

SG_API sg_status sg_sphere_create(int n, sg_sphere** out);
SG_API void sg_sphere_destroy(sg_sphere* sphere);
SG_API sg_status sg_sphere_info(const sg_sphere* sphere, int* n, double* lambda, double* sigma);

SG_API sg_status sg_param_from_a(const sg_sphere* sphere, double a, sg_param** out);
SG_API sg_status sg_param_from_L(const sg_sphere* sphere, double L, sg_param** out);
SG_API void sg_param_destroy(sg_param* param);
SG_API sg_status sg_param_get_info(const sg_param* param, sg_param_info* out);

SG_API sg_status sg_green_eval(const sg_sphere* sphere, const sg_param* param, sg_method method,
                               double theta, const sg_options* opts, sg_green_result* out);

/* Extracted coefficients g_l of G for each degree in `degrees`. */
SG_API sg_status sg_green_coefficients(const sg_sphere* sphere, const sg_param* param,
                                       sg_method method, const int* degrees, size_t count,
                                       int nodes, const sg_options* opts, double* out);

SG_API sg_status sg_green_coefficient_exact(const sg_sphere* sphere, const sg_param* param, int l,
                                            double* out);

/* C_0^λ(t) .. C_lmax^λ(t) into out[0..lmax]. */
SG_API sg_status sg_gegenbauer(double lambda, double t, int lmax, double* out);

SG_API sg_status sg_poisson_kernel(const sg_sphere* sphere, double r, double t, double* out);

SG_API sg_status sg_moment_identity(const sg_sphere* sphere, double L, int l,
                                    const sg_options* opts, double* quadrature, double* exact);

SG_API sg_status sg_solve_spectrum(const sg_sphere* sphere, const sg_param* param, const double* f,
                                   size_t count, double* u);
SG_API sg_status sg_apply_operator(const sg_sphere* sphere, double a, const double* u, size_t count,
                                   double* f);

/* Appell F1(alpha; beta, beta'; gamma; x, y). Complex values as (re, im). */
SG_API sg_status sg_f1_series(double alpha, double beta, double beta_prime, double gamma,
                              double x_re, double x_im, double y_re, double y_im, double* out_re,
                              double* out_im);
SG_API sg_status sg_f1_integral(double alpha, double beta, double beta_prime, double gamma,
                                double x_re, double x_im, double y_re, double y_im,
                                const sg_options* opts, double* out_re, double* out_im);

SG_API size_t sg_criterion_count(void);

/* Runs the listed acceptance criteria (all of them when ids is NULL) and
 * reports each through `cb`. `*failed` receives the number that failed. A
 * tolerance outside the supported range is reported per criterion. */
SG_API sg_status sg_selftest(const int* ids, size_t count, double tol, sg_criterion_callback cb,
                             void* user, int* failed);

#ifdef __cplusplus
}
#endif

#endif
