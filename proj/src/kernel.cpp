#include "sphgreen/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sphgreen/error.hpp"
#include "sphgreen/gegenbauer.hpp"

namespace sphgreen {

namespace {

void check_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("kernel radius must lie in [0, 1), got r = " + real_text(r));
  }
}

void check_t(double t) {
  if (!(std::abs(t) <= 1.0)) {
    throw DomainError("cos(theta) must lie in [-1, 1], got t = " + real_text(t));
  }
}

double tail_mode(const SphereContext& ctx, Radius rad, ZonalAngle ang, int M,
                 const BracketConfig& cfg) {
  const double r = rad.r;
  const double lam = ctx.lambda;
  GegenbauerRecurrence rec(lam, ang.t);
  while (rec.degree() < M + 1) {
    rec.advance();
  }
  double sum = rec.zonal();
  if (r == 0.0) {
    return sum;
  }
  double power = 1.0;                          // r^{l-M-1}
  double bound = zonal_term_at_pole(ctx, M + 1);  // r^{l-M-1} z_l(1)
  for (int l = M + 1; l < cfg.lmax_tail; ++l) {
    const double growth = (lam + l + 1.0) / (lam + l) * (l + 2.0 * lam) / (l + 1.0);
    const double ratio = r * growth;
    if (ratio < 1.0) {
      const double remainder = bound * ratio / (1.0 - ratio);
      if (remainder <= cfg.tol * std::max(std::abs(sum), 1.0)) {
        return sum;
      }
    }
    rec.advance();
    power *= r;
    bound *= ratio;
    sum += power * rec.zonal();
  }
  throw AccuracyError("kernel tail did not converge within " + std::to_string(cfg.lmax_tail) +
                          " terms at r = " + real_text(r),
                      sum, bound);
}

double subtraction_mode(const SphereContext& ctx, Radius rad, ZonalAngle ang, int M) {
  double value = unnormalized_kernel(ctx, rad, ang);
  GegenbauerRecurrence rec(ctx.lambda, ang.t);
  double power = 1.0;
  for (int l = 0; l <= M; ++l) {
    if (l > 0) {
      rec.advance();
      power *= rad.r;
    }
    value -= power * rec.zonal();
  }
  return value;
}

}  // namespace

double unnormalized_kernel(const SphereContext& ctx, Radius rad, ZonalAngle ang) {
  // 1 - 2rt + r² = (1-r)² + 2r(1-t)
  const double q = rad.rc * rad.rc + 2.0 * rad.r * ang.tc;
  return rad.rc * (1.0 + rad.r) / std::pow(q, ctx.lambda + 1.0);
}

double poisson_kernel_closed(const SphereContext& ctx, double r, double t) {
  check_radius(r);
  check_t(t);
  return unnormalized_kernel(ctx, Radius::from_r(r), ZonalAngle::from_t(t)) / ctx.sigma;
}

double poisson_kernel_series(const SphereContext& ctx, double r, double t, int lmax) {
  check_radius(r);
  check_t(t);
  if (lmax < 0) {
    throw ParameterError("lmax must be >= 0");
  }
  GegenbauerRecurrence rec(ctx.lambda, t);
  double sum = 1.0;
  double power = 1.0;
  for (int l = 1; l <= lmax && r > 0.0; ++l) {
    rec.advance();
    power *= r;
    sum += power * rec.zonal();
  }
  return sum / ctx.sigma;
}

double scaled_tail_bracket(const SphereContext& ctx, Radius rad, ZonalAngle ang, int M,
                           const BracketConfig& cfg) {
  if (M < -1) {
    throw ParameterError("bracket truncation index must be >= -1");
  }
  if (M == -1) {
    return unnormalized_kernel(ctx, rad, ang);
  }
  bool tail = rad.r <= cfg.r_switch;
  if (cfg.mode == BracketMode::Tail) tail = true;
  if (cfg.mode == BracketMode::Subtraction) tail = false;
  if (tail) {
    return tail_mode(ctx, rad, ang, M, cfg);
  }
  if (rad.r == 0.0) {
    throw DomainError("subtraction-mode bracket cannot be scaled at r = 0");
  }
  return subtraction_mode(ctx, rad, ang, M) / std::pow(rad.r, M + 1);
}

double kernel_tail_bracket(const SphereContext& ctx, double r, double t, int M,
                           const BracketConfig& cfg) {
  check_radius(r);
  check_t(t);
  if (M < -1) {
    throw ParameterError("bracket truncation index must be >= -1");
  }
  const Radius rad = Radius::from_r(r);
  const ZonalAngle ang = ZonalAngle::from_t(t);
  if (M == -1) {
    return unnormalized_kernel(ctx, rad, ang);
  }
  if (r == 0.0) {
    return 0.0;
  }
  if (cfg.mode == BracketMode::Subtraction || (cfg.mode == BracketMode::Auto && r > cfg.r_switch)) {
    return subtraction_mode(ctx, rad, ang, M);
  }
  return tail_mode(ctx, rad, ang, M, cfg) * std::pow(r, M + 1);
}

}  // namespace sphgreen
