#include "sphgreen/green_integral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "sphgreen/error.hpp"
#include "sphgreen/gegenbauer.hpp"
#include "sphgreen/kernel.hpp"

namespace sphgreen {

namespace {

void check_supported(const SphereContext& ctx, const HelmholtzParameter& p) {
  if (p.kind == ParameterKind::ComplexL) {
    std::ostringstream os;
    os << "a = " << p.a << " < -(n-1)^2/4 has complex roots L; only the series route supports it";
    throw UnsupportedParameter(os.str());
  }
  if (p.excluded || 2.0 * p.L == 1.0 - ctx.n) {
    std::ostringstream os;
    os << "L = (1-n)/2 = " << p.L << " is excluded (requires L != (1-n)/2)";
    throw ExcludedParameter(os.str());
  }
}

void check_theta(double theta) {
  if (!(theta > 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("theta must lie in (0, pi], got " + real_text(theta) +
                      " (G is singular at theta = 0)");
  }
}

double log_radius(Radius rad) {
  return rad.r < 0.5 ? std::log(rad.r) : std::log1p(-rad.rc);
}

// (r^p - r^q) r^extra without cancellation near r = 1 or overflow near r = 0.
double power_difference(double lnr, double p, double q, double extra) {
  const double lo = std::min(p, q);
  const double gap = std::abs(p - q);
  const double sign = p >= q ? 1.0 : -1.0;
  const double base = (lo + extra) == 0.0 ? 1.0 : std::exp((lo + extra) * lnr);
  return sign * base * std::expm1(gap * lnr);
}

double integrand_at(const SphereContext& ctx, const HelmholtzParameter& p, int M, Radius rad,
                    ZonalAngle ang, const BracketConfig& bc) {
  const double lnr = log_radius(rad);
  const double pre = power_difference(lnr, ctx.n + p.L - 2.0, -p.L - 1.0, M + 1.0);
  if (pre == 0.0) {
    return 0.0;
  }
  return pre * scaled_tail_bracket(ctx, rad, ang, M, bc);
}

}  // namespace

int bracket_truncation(const HelmholtzParameter& params) {
  switch (params.kind) {
    case ParameterKind::Poisson:
    case ParameterKind::Resonant:
      return static_cast<int>(params.L);
    default:
      return params.L0;
  }
}

double green_integrand(const SphereContext& ctx, const HelmholtzParameter& params, double r,
                       double t) {
  check_supported(ctx, params);
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("integrand radius must lie in (0, 1)");
  }
  if (!(std::abs(t) <= 1.0)) {
    throw DomainError("cos(theta) must lie in [-1, 1]");
  }
  return integrand_at(ctx, params, bracket_truncation(params), Radius::from_r(r),
                      ZonalAngle::from_t(t), BracketConfig{});
}

GreenEvaluation green_integral(const SphereContext& ctx, const HelmholtzParameter& params,
                               double theta, const QuadratureConfig& qc) {
  check_supported(ctx, params);
  check_theta(theta);
  validate(qc);

  const int M = bracket_truncation(params);
  const ZonalAngle ang = ZonalAngle::from_theta(theta);

  // Finite part: l = 0..L0, or l = 0..L-1 when mode L is omitted.
  const int last = params.kind == ParameterKind::NonResonant ? params.L0 : M - 1;
  double leading = 0.0;
  if (last >= 0) {
    const auto z = zonal_terms(ctx, ang.t, last);
    for (int l = 0; l <= last; ++l) {
      leading += green_coefficient(ctx, params.a, l) * z[static_cast<std::size_t>(l)];
    }
  }

  QuadratureConfig local = qc;
  if (theta < std::numbers::pi / 12.0) {
    local.max_levels = std::min(qc.max_levels + 3, 24);
  }
  BracketConfig bc;
  bc.r_switch = qc.r_switch;
  const auto res = integrate_unit(
      [&](double r, double rc) { return integrand_at(ctx, params, M, Radius{r, rc}, ang, bc); },
      local);

  const double scale = 1.0 / (ctx.n + 2.0 * params.L - 1.0);
  GreenEvaluation ev;
  ev.theta = theta;
  ev.method = GreenMethod::Integral;
  ev.value = leading + scale * res.value;
  ev.error_estimate = std::abs(scale) * res.error;
  ev.work = res.evaluations + (last + 1);
  if (!res.converged) {
    std::ostringstream os;
    os << "radial quadrature missed tol " << qc.tol << " at theta = " << theta
       << " (estimate " << res.error << ", L1 " << res.l1 << ")";
    throw AccuracyError(os.str(), ev.value, ev.error_estimate);
  }
  return ev;
}

MomentCheck moment_identity(const SphereContext& ctx, double L, int l, const QuadratureConfig& qc) {
  const int n = ctx.n;
  if (2.0 * L == 1.0 - n) {
    throw ExcludedParameter("L = (1-n)/2 is excluded (requires L != (1-n)/2)");
  }
  const int L0 = truncation_index(n, L);
  if (l <= L0) {
    throw PreconditionError("moment identity needs l > L0 = " + std::to_string(L0) +
                            ", got l = " + std::to_string(l));
  }
  const double p = n + L - 2.0 + l;
  const double q = -L - 1.0 + l;
  const auto res = integrate_unit(
      [&](double r, double rc) { return power_difference(log_radius({r, rc}), p, q, 0.0); }, qc);
  const double scale = 1.0 / (n + 2.0 * L - 1.0);
  MomentCheck mc;
  mc.quadrature_value = scale * res.value;
  mc.exact_value = 1.0 / ((L - l) * (n + L + l - 1.0));
  if (!res.converged) {
    throw AccuracyError("moment quadrature missed tolerance", mc.quadrature_value,
                        std::abs(scale) * res.error);
  }
  return mc;
}

}  // namespace sphgreen
