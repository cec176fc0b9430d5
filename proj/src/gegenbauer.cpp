#include "sphgreen/gegenbauer.hpp"

#include <cmath>
#include <string>

#include "sphgreen/error.hpp"

namespace sphgreen {

namespace {

void check_args(double lambda, double t) {
  if (!(lambda > 0.0)) {
    throw ParameterError("Gegenbauer order must be positive, got " + real_text(lambda));
  }
  if (!(std::abs(t) <= 1.0)) {
    throw DomainError("Gegenbauer argument must lie in [-1, 1], got " + real_text(t));
  }
}

}  // namespace

GegenbauerSequence gegenbauer_eval(double lambda, double t, int lmax) {
  check_args(lambda, t);
  if (lmax < 0) {
    throw ParameterError("lmax must be >= 0");
  }
  GegenbauerSequence seq{lambda, t, {}};
  seq.values.reserve(static_cast<std::size_t>(lmax) + 1);
  GegenbauerRecurrence rec(lambda, t);
  seq.values.push_back(rec.value());
  for (int l = 1; l <= lmax; ++l) {
    rec.advance();
    seq.values.push_back(rec.value());
  }
  return seq;
}

double zonal_term(const SphereContext& ctx, int l, double t) {
  if (l < 0) {
    throw ParameterError("degree must be >= 0");
  }
  const auto seq = gegenbauer_eval(ctx.lambda, t, l);
  return (ctx.lambda + l) / ctx.lambda * seq.values.back();
}

std::vector<double> zonal_terms(const SphereContext& ctx, double t, int lmax) {
  auto seq = gegenbauer_eval(ctx.lambda, t, lmax);
  for (std::size_t l = 0; l < seq.values.size(); ++l) {
    seq.values[l] *= (ctx.lambda + static_cast<double>(l)) / ctx.lambda;
  }
  return std::move(seq.values);
}

double zonal_term_at_pole(const SphereContext& ctx, int l) {
  // (2λ)_l / l! = Γ(l+2λ) / (Γ(2λ) l!)
  const double lam = ctx.lambda;
  const double log_c = std::lgamma(l + 2.0 * lam) - std::lgamma(2.0 * lam) - std::lgamma(l + 1.0);
  return (lam + l) / lam * std::exp(log_c);
}

}  // namespace sphgreen
