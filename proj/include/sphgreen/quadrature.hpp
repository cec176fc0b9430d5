#pragma once

#include <complex>
#include <functional>

namespace sphgreen {

enum class QuadratureScheme { TanhSinh, AdaptiveGaussKronrod };

struct QuadratureConfig {
  QuadratureScheme scheme = QuadratureScheme::TanhSinh;
  double tol = 1e-10;  ///< relative to the L1 norm of the integrand
  int max_levels = 15;
  double r_switch = 0.5;
};

inline constexpr double kMinQuadratureTolerance = 1e-14;

/// Throws AccuracyError for tol below kMinQuadratureTolerance (not reachable
/// in double precision) and ParameterError for other invalid fields.
void validate(const QuadratureConfig& qc);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Integrand on (0,1) receiving the abscissa r and its complement 1 - r.
using UnitIntegrand = std::function<double(double r, double rc)>;

/// ∫_0^1 f. Never evaluates f at the endpoints. Convergence is reported,
/// not enforced; callers decide whether a miss is an error.
QuadratureResult integrate_unit(const UnitIntegrand& f, const QuadratureConfig& qc);

struct ComplexQuadratureResult {
  std::complex<double> value;
  double error = 0.0;
  double l1 = 0.0;
  long evaluations = 0;
  bool converged = false;
};

using ComplexUnitIntegrand = std::function<std::complex<double>(double u, double uc)>;

ComplexQuadratureResult integrate_unit_complex(const ComplexUnitIntegrand& f,
                                               const QuadratureConfig& qc);

}  // namespace sphgreen
