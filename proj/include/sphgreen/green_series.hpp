#pragma once

#include <string_view>
#include <vector>

#include "sphgreen/sphere_params.hpp"

namespace sphgreen {

enum class GreenMethod { Series, Integral, Appell };

std::string_view method_name(GreenMethod m) noexcept;

/// G(cos θ) from one evaluation route.
struct GreenEvaluation {
  double value = 0.0;
  double theta = 0.0;
  GreenMethod method = GreenMethod::Series;
  double error_estimate = 0.0;
  long work = 0;  ///< terms summed or integrand evaluations
};

inline const std::vector<double> kDefaultAbelRadii{0.9, 0.99, 0.999};

/// Gegenbauer series of G. The index set omits l = L for Resonant and l = 0
/// for Poisson parameters.
///
/// With empty abel_radii the raw partial sum through lmax is returned.
/// Otherwise the r^l-damped sums are formed at each radius (truncated
/// automatically, lmax does not apply) and extrapolated to r = 1 by
/// polynomial extrapolation in 1 - r; the error estimate is the gap between
/// the last two diagonal extrapolants.
GreenEvaluation green_series(const SphereContext& ctx, const HelmholtzParameter& params,
                             double theta, int lmax,
                             const std::vector<double>& abel_radii = kDefaultAbelRadii);

/// Σ g_l r^l z_l(cos θ) over the admissible index set, summed until the
/// remainder bound drops below machine precision. `terms` receives the count.
double abel_damped_sum(const SphereContext& ctx, const HelmholtzParameter& params,
                       double theta, double r, long* terms = nullptr);

}  // namespace sphgreen
