#include "sphgreen/appell.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sphgreen/error.hpp"

namespace sphgreen {

using cplx = std::complex<double>;

std::complex<double> f1_double_series(const F1Arguments& args, double tol, int max_order) {
  if (!(std::abs(args.x) < 1.0) || !(std::abs(args.y) < 1.0)) {
    throw DomainError("F1 double series needs |x| < 1 and |y| < 1");
  }
  const double a = args.alpha;
  const double b = args.beta;
  const double bp = args.beta_prime;
  const double c = args.gamma;

  // row[m] holds the term with indices (m, N - m) of the current order N.
  std::vector<cplx> row{cplx(1.0, 0.0)};
  cplx sum(1.0, 0.0);
  int quiet = 0;
  for (int N = 0; N < max_order; ++N) {
    std::vector<cplx> next(static_cast<std::size_t>(N) + 2);
    for (int m = 0; m <= N; ++m) {
      const int k = N - m;
      next[static_cast<std::size_t>(m)] =
          row[static_cast<std::size_t>(m)] * ((a + N) * (bp + k) / ((c + N) * (k + 1.0))) * args.y;
    }
    next[static_cast<std::size_t>(N) + 1] =
        row[static_cast<std::size_t>(N)] * ((a + N) * (b + N) / ((c + N) * (N + 1.0))) * args.x;
    double order_mag = 0.0;
    cplx order_sum(0.0, 0.0);
    for (const auto& v : next) {
      order_sum += v;
      order_mag += std::abs(v);
    }
    sum += order_sum;
    row = std::move(next);
    quiet = order_mag <= tol * std::abs(sum) ? quiet + 1 : 0;
    if (quiet >= 3) {
      return sum;
    }
  }
  throw AccuracyError("F1 double series did not converge within " + std::to_string(max_order) +
                          " orders",
                      sum.real(), std::abs(sum));
}

F1Value f1_integral_detail(const F1Arguments& args, const QuadratureConfig& qc) {
  const double a = args.alpha;
  const double c = args.gamma;
  if (!(a > 0.0 && a < c)) {
    throw ParameterError("F1 integral representation needs 0 < alpha < gamma");
  }
  if (!(std::abs(args.x) <= 1.0) || !(std::abs(args.y) <= 1.0)) {
    throw DomainError("F1 integral route needs |x| <= 1 and |y| <= 1");
  }
  if (args.x == cplx(1.0, 0.0) || args.y == cplx(1.0, 0.0)) {
    throw DomainError("F1 integrand is not integrable at x = 1 or y = 1 (theta = 0)");
  }
  const cplx one_minus_x = 1.0 - args.x;
  const cplx one_minus_y = 1.0 - args.y;
  const double tail_exp = c - a - 1.0;
  auto f = [&](double u, double uc) -> cplx {
    // 1 - u x = (1 - u) + u (1 - x)
    const cplx dx = uc + u * one_minus_x;
    const cplx dy = uc + u * one_minus_y;
    double w = std::pow(u, a - 1.0);
    if (tail_exp != 0.0) {
      w *= std::pow(uc, tail_exp);
    }
    return w * std::pow(dx, -args.beta) * std::pow(dy, -args.beta_prime);
  };
  const auto res = integrate_unit_complex(f, qc);
  const double norm = std::exp(std::lgamma(c) - std::lgamma(c - a) - std::lgamma(a));
  F1Value out{norm * res.value, norm * res.error, res.evaluations};
  if (!res.converged) {
    std::ostringstream os;
    os << "F1 quadrature missed tol " << qc.tol << " (estimate " << res.error << ")";
    throw AccuracyError(os.str(), out.value.real(), out.error);
  }
  return out;
}

bool appell_applicable(const SphereContext& ctx, const HelmholtzParameter& params) noexcept {
  const double lo = 1.0 - ctx.n;
  return params.kind == ParameterKind::NonResonant && params.L > lo && params.L < 0.0 &&
         2.0 * params.L != lo;
}

AppellCombination appell_combination(const SphereContext& ctx, const HelmholtzParameter& params,
                                     double theta, const QuadratureConfig& qc) {
  const int n = ctx.n;
  const double L = params.L;
  if (params.kind == ParameterKind::ComplexL) {
    throw UnsupportedParameter("a < -(n-1)^2/4 has complex roots L; the F1 closed form needs real L");
  }
  if (2.0 * L == 1.0 - n) {
    throw ExcludedParameter("L = (1-n)/2 is excluded (requires L != (1-n)/2)");
  }
  if (!appell_applicable(ctx, params)) {
    std::ostringstream os;
    os << "F1 closed form needs 1-n < L < 0, got L = " << L << " for n = " << n;
    throw UnsupportedParameter(os.str());
  }
  if (!(theta > 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("theta must lie in (0, pi], got " + real_text(theta));
  }

  const cplx x = std::polar(1.0, theta);
  const double beta = ctx.lambda + 1.0;
  struct Term {
    double alpha;
    double sign;
  };
  const std::array<Term, 4> terms{{
      {n + L - 1.0, +1.0},
      {n + L + 1.0, -1.0},
      {-L, -1.0},
      {-L + 2.0, +1.0},
  }};

  AppellCombination out;
  for (const auto& term : terms) {
    F1Arguments args{term.alpha, beta, beta, term.alpha + 1.0, x, std::conj(x)};
    const auto f1 = f1_integral_detail(args, qc);
    out.value += term.sign * f1.value / term.alpha;
    out.error += f1.error / term.alpha;
    out.evaluations += f1.evaluations;
  }
  const double scale = 1.0 / (n + 2.0 * L - 1.0);
  out.value *= scale;
  out.error *= std::abs(scale);
  return out;
}

GreenEvaluation green_appell(const SphereContext& ctx, const HelmholtzParameter& params,
                             double theta, const QuadratureConfig& qc) {
  const auto comb = appell_combination(ctx, params, theta, qc);
  const double re = comb.value.real();
  const double im = comb.value.imag();
  const double allowed = std::max(1e-10, 10.0 * qc.tol) * std::max(1.0, std::abs(re));
  if (std::abs(im) > allowed) {
    std::ostringstream os;
    os << "F1 combination is not real: imaginary part " << im << " at theta = " << theta;
    throw InternalError(os.str());
  }
  GreenEvaluation ev;
  ev.theta = theta;
  ev.method = GreenMethod::Appell;
  ev.value = re;
  ev.error_estimate = comb.error;
  ev.work = comb.evaluations;
  return ev;
}

}  // namespace sphgreen
