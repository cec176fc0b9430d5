#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "sphgreen/quadrature.hpp"

namespace sphgreen {

/// Outcome of one acceptance criterion. `measured` is the worst observed
/// discrepancy in the units of `threshold`.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct CriterionInfo {
  int id;
  const char* name;
  const char* summary;
};

std::span<const CriterionInfo> criteria();

/// Quadrature settings used by the self-test unless overridden.
QuadratureConfig validation_quadrature();

/// Runs one criterion. Library errors are caught and reported as a failure
/// whose detail names the error kind.
CriterionResult run_criterion(int id, const QuadratureConfig& qc = validation_quadrature());

std::vector<CriterionResult> run_validation(std::span<const int> ids,
                                            const QuadratureConfig& qc = validation_quadrature());

/// Gauss series of 2F1(a, b; c; z) for |z| < 1. Independent reference for the
/// x = y reduction of F1.
std::complex<double> hyp2f1_series(double a, double b, double c, std::complex<double> z);

}  // namespace sphgreen
