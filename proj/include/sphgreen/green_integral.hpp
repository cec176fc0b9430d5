#pragma once

#include <utility>

#include "sphgreen/green_series.hpp"
#include "sphgreen/quadrature.hpp"
#include "sphgreen/sphere_params.hpp"

namespace sphgreen {

/// Index M of the last mode subtracted from the kernel inside the integral:
/// L0 for non-resonant parameters, L for resonant ones (Poisson: 0).
int bracket_truncation(const HelmholtzParameter& params);

/// (r^{n+L-2} - r^{-L-1}) · [Σ_n p_r(t) - Σ_{l=0}^{M} r^l z_l(t)]
///
/// Throws UnsupportedParameter for ComplexL and ExcludedParameter for
/// L = (1-n)/2.
double green_integrand(const SphereContext& ctx, const HelmholtzParameter& params, double r,
                       double t);

/// G(cos θ) as the finite leading sum plus the single radial integral
///   1/(n+2L-1) ∫_0^1 (r^{n+L-2} - r^{-L-1}) [Σ_n p_r - Σ_{l≤M} r^l z_l] dr.
/// Resonant parameters give the generalized Green function with mode L
/// removed. Throws AccuracyError (with the best value) if the quadrature
/// misses qc.tol.
GreenEvaluation green_integral(const SphereContext& ctx, const HelmholtzParameter& params,
                               double theta, const QuadratureConfig& qc = {});

struct MomentCheck {
  double quadrature_value = 0.0;
  double exact_value = 0.0;
};

/// Both sides of
///   1/(n+2L-1) ∫_0^1 (r^{n+L-2} - r^{-L-1}) r^l dr = 1/((L-l)(n+L+l-1)),
/// which holds for l > L0. Throws PreconditionError for l <= L0.
MomentCheck moment_identity(const SphereContext& ctx, double L, int l,
                            const QuadratureConfig& qc = {});

}  // namespace sphgreen
