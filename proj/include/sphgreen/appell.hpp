#pragma once

#include <complex>

#include "sphgreen/green_series.hpp"
#include "sphgreen/quadrature.hpp"
#include "sphgreen/sphere_params.hpp"

namespace sphgreen {

/// Arguments of the Appell function F1(α; β, β'; γ; x, y).
struct F1Arguments {
  double alpha = 1.0;
  double beta = 1.0;
  double beta_prime = 1.0;
  double gamma = 2.0;
  std::complex<double> x{0.0, 0.0};
  std::complex<double> y{0.0, 0.0};
};

/// Σ_{m,k} (α)_{m+k} (β)_m (β')_k / ((γ)_{m+k} m! k!) x^m y^k, summed by total
/// order until three consecutive orders fall below tol relative to the sum.
/// Needs |x| < 1 and |y| < 1.
std::complex<double> f1_double_series(const F1Arguments& args, double tol = 1e-15,
                                      int max_order = 4000);

struct F1Value {
  std::complex<double> value;
  double error = 0.0;
  long evaluations = 0;
};

/// Euler-type integral
///   Γ(γ)/(Γ(γ-α)Γ(α)) ∫_0^1 u^{α-1} (1-u)^{γ-α-1} (1-ux)^{-β} (1-uy)^{-β'} du,
/// valid for 0 < α < γ and on the boundary |x| = |y| = 1 away from x = 1.
F1Value f1_integral_detail(const F1Arguments& args, const QuadratureConfig& qc = {});

inline std::complex<double> f1_integral(const F1Arguments& args, const QuadratureConfig& qc = {}) {
  return f1_integral_detail(args, qc).value;
}

struct AppellCombination {
  std::complex<double> value;  ///< the bracketed four-term sum over n + 2L - 1
  double error = 0.0;
  long evaluations = 0;
};

/// Four-term F1 closed form of G for 1-n < L < 0, L != (1-n)/2, before the
/// real part is taken:
///   1/(n+2L-1) [ F1(n+L-1)/(n+L-1) - F1(n+L+1)/(n+L+1) - F1(-L)/(-L) + F1(-L+2)/(-L+2) ]
/// with F1(α) = F1(α; λ+1, λ+1; α+1; e^{iθ}, e^{-iθ}).
AppellCombination appell_combination(const SphereContext& ctx, const HelmholtzParameter& params,
                                     double theta, const QuadratureConfig& qc = {});

/// Real G from the closed form. Throws InternalError if the assembled value
/// has a non-negligible imaginary part.
GreenEvaluation green_appell(const SphereContext& ctx, const HelmholtzParameter& params,
                             double theta, const QuadratureConfig& qc = {});

/// True when the closed form applies: 1-n < L < 0 and L != (1-n)/2.
bool appell_applicable(const SphereContext& ctx, const HelmholtzParameter& params) noexcept;

}  // namespace sphgreen
