#include "sphgreen/sphere_params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sphgreen/error.hpp"

namespace sphgreen {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Dimension: return "DimensionError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Parameter: return "ParameterError";
    case ErrorKind::Accuracy: return "AccuracyError";
    case ErrorKind::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorKind::ExcludedParameter: return "ExcludedParameter";
    case ErrorKind::Precondition: return "PreconditionError";
    case ErrorKind::Compatibility: return "CompatibilityError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

SphereContext make_context(int n) {
  if (n < 2) {
    throw DimensionError("sphere dimension must be >= 2, got n = " + std::to_string(n));
  }
  SphereContext ctx;
  ctx.n = n;
  ctx.lambda = 0.5 * (n - 1);
  const double half = 0.5 * (n + 1);
  ctx.sigma = 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
  return ctx;
}

std::string_view kind_name(ParameterKind kind) noexcept {
  switch (kind) {
    case ParameterKind::Poisson: return "Poisson";
    case ParameterKind::NonResonant: return "NonResonant";
    case ParameterKind::Resonant: return "Resonant";
    case ParameterKind::ComplexL: return "ComplexL";
  }
  return "?";
}

int HelmholtzParameter::resonant_mode() const noexcept {
  if (kind == ParameterKind::Resonant || kind == ParameterKind::Poisson) {
    return static_cast<int>(L);
  }
  return -1;
}

int truncation_index(int n, double L) {
  const double a = std::floor(L);
  const double b = std::floor(1.0 - n - L);
  return static_cast<int>(std::max(a, b));
}

double green_coefficient(const SphereContext& ctx, double a, int l) {
  return 1.0 / (a - eigenvalue(ctx.n, l));
}

namespace {

// Fills the derived fields once L (any root) and a are known.
HelmholtzParameter classify(const SphereContext& ctx, double a, double L, double tol) {
  if (!(tol > 0.0)) {
    throw ParameterError("resonance tolerance must be positive");
  }
  HelmholtzParameter p;
  p.a = a;
  const int n = ctx.n;

  // The resonance root is the larger one; test it regardless of which root
  // was supplied.
  const double principal = std::max(L, 1.0 - n - L);
  const double nearest = std::round(principal);
  if (nearest >= 0.0 && std::abs(principal - nearest) < tol) {
    const int mode = static_cast<int>(nearest);
    p.L = nearest;
    p.a = eigenvalue(n, mode);
    p.kind = mode == 0 ? ParameterKind::Poisson : ParameterKind::Resonant;
  } else {
    p.L = L;
    p.kind = ParameterKind::NonResonant;
  }
  p.L_prime = 1.0 - n - p.L;
  p.L0 = truncation_index(n, p.L);
  p.excluded = (2.0 * p.L == 1.0 - n);
  return p;
}

}  // namespace

HelmholtzParameter params_from_a(const SphereContext& ctx, double a, double resonance_tolerance) {
  if (!std::isfinite(a)) {
    throw ParameterError("spectral shift a must be finite");
  }
  const double m = ctx.n - 1.0;
  const double disc = m * m + 4.0 * a;
  if (disc < 0.0) {
    if (!(resonance_tolerance > 0.0)) {
      throw ParameterError("resonance tolerance must be positive");
    }
    HelmholtzParameter p;
    p.a = a;
    p.L = -0.5 * m;
    p.L_prime = p.L;
    p.L0 = truncation_index(ctx.n, p.L);
    p.kind = ParameterKind::ComplexL;
    return p;
  }
  const double s = std::sqrt(disc);
  // Avoid cancellation in -(n-1) + s when a is small: L = 2a / (m + s).
  const double L = 2.0 * a / (m + s);
  HelmholtzParameter p = classify(ctx, a, L, resonance_tolerance);
  if (p.kind == ParameterKind::NonResonant) {
    p.a = a;
  }
  return p;
}

HelmholtzParameter params_from_L(const SphereContext& ctx, double L, double resonance_tolerance) {
  if (!std::isfinite(L)) {
    throw ParameterError("root L must be finite");
  }
  const double a = L * (ctx.n + L - 1.0);
  return classify(ctx, a, L, resonance_tolerance);
}

}  // namespace sphgreen
