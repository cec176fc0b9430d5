#pragma once

#include <cmath>

#include "sphgreen/sphere_params.hpp"

namespace sphgreen {

/// A point on (0,1) carried with its complement 1 - r, so that quantities
/// near r = 1 keep full relative precision.
struct Radius {
  double r = 0.0;
  double rc = 1.0;  ///< 1 - r

  static Radius from_r(double r) { return {r, 1.0 - r}; }
};

/// cos θ together with 1 - cos θ computed without cancellation.
struct ZonalAngle {
  double t = 1.0;
  double tc = 0.0;  ///< 1 - t

  static ZonalAngle from_theta(double theta) {
    const double s = std::sin(0.5 * theta);
    return {std::cos(theta), 2.0 * s * s};
  }
  static ZonalAngle from_t(double t) { return {t, 1.0 - t}; }
};

/// (1/Σ_n) (1-r²) / (1 - 2rt + r²)^{(n+1)/2}
double poisson_kernel_closed(const SphereContext& ctx, double r, double t);

/// (1/Σ_n) Σ_{l=0}^{lmax} r^l ((λ+l)/λ) C_l^λ(t)
double poisson_kernel_series(const SphereContext& ctx, double r, double t, int lmax);

/// Σ_n p_r(t), the kernel without the surface-measure normalization.
double unnormalized_kernel(const SphereContext& ctx, Radius r, ZonalAngle t);

enum class BracketMode { Auto, Tail, Subtraction };

struct BracketConfig {
  double r_switch = 0.5;
  int lmax_tail = 4096;
  double tol = 2.220446049250313e-16;
  BracketMode mode = BracketMode::Auto;
};

/// Σ_n p_r(t) - Σ_{l=0}^{M} r^l ((λ+l)/λ) C_l^λ(t), for M >= -1.
///
/// Below cfg.r_switch the tail Σ_{l>M} is summed directly, so the O(r^{M+1})
/// result carries full relative precision; above it the partial sum is
/// subtracted from the closed form. Throws AccuracyError if the tail needs
/// more than cfg.lmax_tail terms.
double kernel_tail_bracket(const SphereContext& ctx, double r, double t, int M,
                           const BracketConfig& cfg = {});

/// The bracket divided by r^{M+1}. Finite at r = 0, where it equals the
/// first tail term.
double scaled_tail_bracket(const SphereContext& ctx, Radius r, ZonalAngle t, int M,
                           const BracketConfig& cfg = {});

}  // namespace sphgreen
