#pragma once

#include <string_view>

namespace sphgreen {

/// Dimensional constants of the unit sphere S^n embedded in R^{n+1}.
struct SphereContext {
  int n = 2;
  double lambda = 0.5;  ///< Gegenbauer order (n-1)/2.
  double sigma = 0.0;   ///< Total surface measure of S^n.
};

/// Throws DimensionError for n < 2.
SphereContext make_context(int n);

enum class ParameterKind { Poisson, NonResonant, Resonant, ComplexL };

std::string_view kind_name(ParameterKind kind) noexcept;

/// The spectral shift a of  Δ*u + a u = f  together with the roots of
/// a = L (n + L - 1).
///
/// For ComplexL the roots are the complex pair (1-n)/2 ± i·s; L and L_prime
/// then hold the common real part and L0 is not meaningful.
struct HelmholtzParameter {
  double a = 0.0;
  double L = 0.0;
  double L_prime = 0.0;
  int L0 = 0;
  ParameterKind kind = ParameterKind::Poisson;
  /// L = (1-n)/2, where n + 2L - 1 vanishes and the integral formula is void.
  bool excluded = false;

  /// Index of the omitted mode for Resonant/Poisson, -1 otherwise.
  int resonant_mode() const noexcept;
};

inline constexpr double kDefaultResonanceTolerance = 1e-9;

/// Principal branch: L = (-(n-1) + sqrt((n-1)^2 + 4a)) / 2, so L >= L'.
/// A negative discriminant yields kind ComplexL.
HelmholtzParameter params_from_a(const SphereContext& ctx, double a,
                                 double resonance_tolerance = kDefaultResonanceTolerance);

/// Builds the parameter from a given root. A non-resonant root is kept as
/// supplied, even if it is the smaller one, so that either root can drive
/// the integral formula. Resonant inputs always carry the non-negative
/// integer root.
HelmholtzParameter params_from_L(const SphereContext& ctx, double L,
                                 double resonance_tolerance = kDefaultResonanceTolerance);

/// max(floor(L), floor(1 - n - L)).
int truncation_index(int n, double L);

/// Coefficient 1/(a - l(n+l-1)) of the l-th zonal term of G.
double green_coefficient(const SphereContext& ctx, double a, int l);

/// Laplace-Beltrami eigenvalue magnitude l(n+l-1).
inline double eigenvalue(int n, int l) {
  return static_cast<double>(l) * static_cast<double>(n + l - 1);
}

}  // namespace sphgreen
