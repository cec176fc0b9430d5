#include "sphgreen/solver.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "sphgreen/error.hpp"
#include "sphgreen/gegenbauer.hpp"

namespace sphgreen {

namespace {

void check_spectrum(const SphereContext& ctx, const ZonalSpectrum& s) {
  if (s.n != ctx.n) {
    throw ParameterError("spectrum dimension " + std::to_string(s.n) +
                         " does not match sphere dimension " + std::to_string(ctx.n));
  }
  for (double c : s.coefficients) {
    if (!std::isfinite(c)) {
      throw ParameterError("spectrum coefficients must be finite");
    }
  }
}

}  // namespace

ZonalSpectrum solve_spectrum(const SphereContext& ctx, const HelmholtzParameter& params,
                             const ZonalSpectrum& f) {
  check_spectrum(ctx, f);
  const int skip = params.resonant_mode();
  ZonalSpectrum u{ctx.n, std::vector<double>(f.coefficients.size(), 0.0)};
  for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
    const int l = static_cast<int>(i);
    const double c = f.coefficients[i];
    if (l == skip) {
      if (c != 0.0) {
        std::ostringstream os;
        if (params.kind == ParameterKind::Poisson) {
          os << "Poisson problem needs a mean-zero right-hand side (c_0 = " << c << ")";
        } else {
          os << "resonant a = " << params.a << " annihilates mode " << l
             << "; the right-hand side must have c_" << l << " = 0 (got " << c << ")";
        }
        throw CompatibilityError(os.str());
      }
      continue;
    }
    u.coefficients[i] = c / (params.a - eigenvalue(ctx.n, l));
  }
  return u;
}

ZonalSpectrum apply_operator(const SphereContext& ctx, double a, const ZonalSpectrum& u) {
  check_spectrum(ctx, u);
  ZonalSpectrum out{ctx.n, u.coefficients};
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) {
    out.coefficients[i] *= a - eigenvalue(ctx.n, static_cast<int>(i));
  }
  return out;
}

double gegenbauer_norm(double lambda, int l) {
  // π 2^{1-2λ} Γ(l+2λ) / (l! (l+λ) Γ(λ)²)
  const double log_h = std::log(std::numbers::pi) + (1.0 - 2.0 * lambda) * std::log(2.0) +
                       std::lgamma(l + 2.0 * lambda) - std::lgamma(l + 1.0) -
                       std::log(l + lambda) - 2.0 * std::lgamma(lambda);
  return std::exp(log_h);
}

GaussRule gauss_gegenbauer(double lambda, int nodes) {
  if (!(lambda > 0.0)) {
    throw ParameterError("Gegenbauer order must be positive");
  }
  if (nodes < 1) {
    throw ParameterError("Gauss rule needs at least one node");
  }
  const auto N = static_cast<Eigen::Index>(nodes);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(N);
  Eigen::VectorXd sub(std::max<Eigen::Index>(N - 1, 0));
  for (Eigen::Index k = 1; k < N; ++k) {
    const double kk = static_cast<double>(k);
    sub(k - 1) = std::sqrt(kk * (kk + 2.0 * lambda - 1.0) /
                           (4.0 * (kk + lambda) * (kk + lambda - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) {
    throw InternalError("Golub-Welsch eigenproblem failed for " + std::to_string(nodes) +
                        " nodes");
  }
  const double mu0 = std::exp(0.5 * std::log(std::numbers::pi) + std::lgamma(lambda + 0.5) -
                              std::lgamma(lambda + 1.0));
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(nodes));
  rule.weights.resize(static_cast<std::size_t>(nodes));
  for (Eigen::Index j = 0; j < N; ++j) {
    const double v0 = es.eigenvectors()(0, j);
    rule.nodes[static_cast<std::size_t>(j)] = es.eigenvalues()(j);
    rule.weights[static_cast<std::size_t>(j)] = mu0 * v0 * v0;
  }
  return rule;
}

std::vector<double> extract_green_coefficients(const SphereContext& ctx,
                                               const std::function<double(double)>& zonal,
                                               std::span<const int> degrees, int nodes,
                                               ExtractionRule rule) {
  int lmax = 0;
  for (int l : degrees) {
    if (l < 0) {
      throw ParameterError("degree must be >= 0");
    }
    if (nodes < 2 * l + 16) {
      throw PreconditionError("extraction at l = " + std::to_string(l) + " needs at least " +
                              std::to_string(2 * l + 16) + " nodes, got " +
                              std::to_string(nodes));
    }
    lmax = std::max(lmax, l);
  }
  const double lam = ctx.lambda;

  // Quadrature points as (θ, weight) pairs for ∫_{-1}^{1} F(t)(1-t²)^{λ-1/2} dt.
  std::vector<double> thetas;
  std::vector<double> weights;
  if (rule == ExtractionRule::GegenbauerT) {
    const auto g = gauss_gegenbauer(lam, nodes);
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      thetas.push_back(std::acos(g.nodes[j]));
      weights.push_back(g.weights[j]);
    }
  } else {
    const auto g = gauss_gegenbauer(0.5, nodes);
    const double half_pi = 0.5 * std::numbers::pi;
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      const double theta = half_pi * (g.nodes[j] + 1.0);
      thetas.push_back(theta);
      weights.push_back(half_pi * g.weights[j] * std::pow(std::sin(theta), 2.0 * lam));
    }
  }

  std::vector<double> acc(static_cast<std::size_t>(lmax) + 1, 0.0);
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    const double fv = zonal(thetas[j]) * weights[j];
    const auto c = gegenbauer_eval(lam, std::clamp(std::cos(thetas[j]), -1.0, 1.0), lmax);
    for (int l = 0; l <= lmax; ++l) {
      acc[static_cast<std::size_t>(l)] += fv * c.values[static_cast<std::size_t>(l)];
    }
  }

  std::vector<double> out;
  out.reserve(degrees.size());
  for (int l : degrees) {
    out.push_back(acc[static_cast<std::size_t>(l)] / (gegenbauer_norm(lam, l) * (lam + l) / lam));
  }
  return out;
}

double extract_green_coefficient(const SphereContext& ctx,
                                 const std::function<double(double)>& zonal, int l, int nodes,
                                 ExtractionRule rule) {
  const int degrees[] = {l};
  return extract_green_coefficients(ctx, zonal, degrees, nodes, rule).front();
}

}  // namespace sphgreen
