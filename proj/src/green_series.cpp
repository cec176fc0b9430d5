#include "sphgreen/green_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sphgreen/error.hpp"
#include "sphgreen/gegenbauer.hpp"

namespace sphgreen {

std::string_view method_name(GreenMethod m) noexcept {
  switch (m) {
    case GreenMethod::Series: return "series";
    case GreenMethod::Integral: return "integral";
    case GreenMethod::Appell: return "appell";
  }
  return "?";
}

namespace {

constexpr long kMaxAbelTerms = 5'000'000;

void check_theta(double theta) {
  if (!(theta > 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("theta must lie in (0, pi], got " + real_text(theta) +
                      " (G is singular at theta = 0)");
  }
}

int omitted_mode(const HelmholtzParameter& p) {
  if (p.kind == ParameterKind::Resonant || p.kind == ParameterKind::Poisson) {
    if (p.L != std::floor(p.L) || p.L < 0.0) {
      throw InternalError("resonant parameter carries non-integer root L = " +
                          real_text(p.L));
    }
    return static_cast<int>(p.L);
  }
  return -1;
}

// Neville tableau on (h_i, s_i), extrapolated to h = 0. Returns the
// diagonal entries P_{0..k-1}(0) and P_{0..k-2}(0): the full extrapolant and
// its predecessor.
std::pair<double, double> extrapolate_to_zero(const std::vector<double>& h,
                                              const std::vector<double>& s) {
  const std::size_t k = h.size();
  std::vector<double> p = s;
  double previous = s.front();
  for (std::size_t m = 1; m < k; ++m) {
    if (m > 1) {
      previous = p[0];
    }
    for (std::size_t i = 0; i + m < k; ++i) {
      p[i] = (h[i] * p[i + 1] - h[i + m] * p[i]) / (h[i] - h[i + m]);
    }
  }
  return {p[0], previous};
}

}  // namespace

double abel_damped_sum(const SphereContext& ctx, const HelmholtzParameter& params, double theta,
                       double r, long* terms) {
  check_theta(theta);
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("Abel radius must lie in (0, 1)");
  }
  const int skip = omitted_mode(params);
  const double lam = ctx.lambda;
  const double t = std::cos(theta);
  GegenbauerRecurrence rec(lam, t);
  double sum = 0.0;
  double largest = 0.0;
  double power = 1.0;
  double pole = 1.0;  // z_l(1)
  for (long l = 0; l < kMaxAbelTerms; ++l) {
    if (l > 0) {
      rec.advance();
      power *= r;
      pole *= (lam + l) / (lam + l - 1.0) * (l + 2.0 * lam - 1.0) / l;
    }
    const double ev = eigenvalue(ctx.n, static_cast<int>(l));
    const double g = 1.0 / (params.a - ev);
    if (l != skip) {
      const double term = g * power * rec.zonal();
      sum += term;
      largest = std::max(largest, std::abs(term));
    }
    if (ev > params.a) {
      const double growth = (lam + l + 1.0) / (lam + l) * (l + 2.0 * lam) / (l + 1.0);
      const double ratio = r * growth;
      if (ratio < 1.0) {
        const double remainder = std::abs(g) * power * pole * ratio / (1.0 - ratio);
        if (remainder <= 1e-17 * std::max(std::abs(sum), largest)) {
          if (terms != nullptr) *terms = l + 1;
          return sum;
        }
      }
    }
  }
  throw AccuracyError("Abel-damped series did not converge at r = " + real_text(r), sum,
                      std::abs(sum));
}

GreenEvaluation green_series(const SphereContext& ctx, const HelmholtzParameter& params,
                             double theta, int lmax, const std::vector<double>& abel_radii) {
  check_theta(theta);
  const int skip = omitted_mode(params);
  GreenEvaluation ev;
  ev.theta = theta;
  ev.method = GreenMethod::Series;

  if (abel_radii.empty()) {
    if (lmax < 0) {
      throw ParameterError("lmax must be >= 0");
    }
    const double t = std::cos(theta);
    GegenbauerRecurrence rec(ctx.lambda, t);
    double sum = 0.0;
    double last = 0.0;
    for (int l = 0; l <= lmax; ++l) {
      if (l > 0) rec.advance();
      if (l == skip) continue;
      last = green_coefficient(ctx, params.a, l) * rec.zonal();
      sum += last;
    }
    ev.value = sum;
    ev.error_estimate = std::abs(last);
    ev.work = lmax + 1;
    return ev;
  }

  for (std::size_t i = 0; i < abel_radii.size(); ++i) {
    const double r = abel_radii[i];
    if (!(r > 0.0 && r < 1.0) || (i > 0 && !(r > abel_radii[i - 1]))) {
      throw ParameterError("Abel radii must be strictly increasing in (0, 1)");
    }
  }

  std::vector<double> h;
  std::vector<double> s;
  for (double r : abel_radii) {
    long terms = 0;
    s.push_back(abel_damped_sum(ctx, params, theta, r, &terms));
    h.push_back(1.0 - r);
    ev.work += terms;
  }
  if (s.size() == 1) {
    ev.value = s[0];
    ev.error_estimate = h[0] * std::abs(s[0]);
    return ev;
  }
  const auto [full, lower] = extrapolate_to_zero(h, s);
  ev.value = full;
  ev.error_estimate = std::abs(full - lower);
  return ev;
}

}  // namespace sphgreen
