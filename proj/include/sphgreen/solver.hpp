#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sphgreen/sphere_params.hpp"

namespace sphgreen {

/// Coefficients c_l of a band-limited zonal function
///   f(cos θ) = Σ_{l=0}^{lmax} c_l ((λ+l)/λ) C_l^λ(cos θ).
struct ZonalSpectrum {
  int n = 2;
  std::vector<double> coefficients;
};

/// u with (Δ* + a) u = f, mode by mode: u_l = c_l / (a - l(n+l-1)).
/// Poisson needs c_0 = 0 and Resonant needs c_L = 0 (CompatibilityError
/// otherwise); the corresponding u entry is set to 0.
ZonalSpectrum solve_spectrum(const SphereContext& ctx, const HelmholtzParameter& params,
                             const ZonalSpectrum& f);

/// (Δ* + a) u, i.e. (a - l(n+l-1)) u_l.
ZonalSpectrum apply_operator(const SphereContext& ctx, double a, const ZonalSpectrum& u);

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss rule for the weight (1-t²)^{λ-1/2} on (-1,1), built by Golub-Welsch
/// from the Jacobi matrix of the Gegenbauer recurrence. λ = 1/2 gives
/// Gauss-Legendre.
GaussRule gauss_gegenbauer(double lambda, int nodes);

/// ∫_{-1}^{1} (C_l^λ)² (1-t²)^{λ-1/2} dt
double gegenbauer_norm(double lambda, int l);

enum class ExtractionRule {
  /// Gauss-Legendre in θ on (0, π) against sin^{n-1}θ. Tolerates the pole
  /// singularity of G (logarithmic for even n).
  LegendreTheta,
  /// Gauss-Gegenbauer in t = cos θ. Exact for band-limited input.
  GegenbauerT,
};

inline constexpr int kDefaultExtractionNodes = 256;

/// Coefficient g_l of ((λ+l)/λ) C_l^λ in the zonal function θ ↦ zonal(θ),
/// obtained from Gegenbauer orthogonality. Needs nodes >= 2l + 16.
double extract_green_coefficient(const SphereContext& ctx,
                                 const std::function<double(double theta)>& zonal, int l,
                                 int nodes = kDefaultExtractionNodes,
                                 ExtractionRule rule = ExtractionRule::LegendreTheta);

/// Same for several degrees, sharing one set of function evaluations.
std::vector<double> extract_green_coefficients(const SphereContext& ctx,
                                               const std::function<double(double theta)>& zonal,
                                               std::span<const int> degrees,
                                               int nodes = kDefaultExtractionNodes,
                                               ExtractionRule rule = ExtractionRule::LegendreTheta);

}  // namespace sphgreen
