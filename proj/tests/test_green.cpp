#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sphgreen/appell.hpp"
#include "sphgreen/error.hpp"
#include "sphgreen/gegenbauer.hpp"
#include "sphgreen/green_integral.hpp"
#include "sphgreen/green_series.hpp"

using namespace sphgreen;
using oracle::pi;

namespace {
QuadratureConfig tight() {
  QuadratureConfig qc;
  qc.tol = 1e-13;
  return qc;
}
}  // namespace

TEST_CASE("integral route against closed forms at a = 0") {
  const auto c2 = make_context(2);
  const auto c3 = make_context(3);
  const auto p2 = params_from_a(c2, 0.0);
  const auto p3 = params_from_a(c3, 0.0);
  for (double th : {1e-5, 0.01, pi / 6, pi / 2, 2.0, 3.0, pi}) {
    const double g2 = green_integral(c2, p2, th, tight()).value;
    const double g3 = green_integral(c3, p3, th, tight()).value;
    CHECK(g2 == doctest::Approx(oracle::poisson_n2(th)).epsilon(1e-11));
    CHECK(g3 == doctest::Approx(oracle::poisson_n3(th)).epsilon(1e-11));
  }
}

TEST_CASE("integral route against frozen Helmholtz values") {
  const auto c2 = make_context(2);
  for (const auto& f : oracle::kFrozenN2) {
    const auto p = params_from_L(c2, f.L);
    CHECK(green_integral(c2, p, f.theta, tight()).value ==
          doctest::Approx(f.value).epsilon(1e-12));
  }
  const auto c3 = make_context(3);
  for (const auto& f : oracle::kFrozenN3) {
    const auto p = params_from_L(c3, f.L);
    CHECK(green_integral(c3, p, f.theta, tight()).value ==
          doctest::Approx(f.value).epsilon(1e-12));
    CHECK(oracle::helmholtz_n3(f.L, f.theta) == doctest::Approx(f.value).epsilon(1e-13));
  }
}

TEST_CASE("S^3 closed form over a sweep of roots") {
  const auto c3 = make_context(3);
  for (double L : {-1.9, -1.45, -0.2, 0.45, 1.3, 2.6}) {
    const auto p = params_from_L(c3, L);
    for (double th : {0.05, 0.8, 1.9, 2.9}) {
      CHECK(green_integral(c3, p, th, tight()).value ==
            doctest::Approx(oracle::helmholtz_n3(L, th)).epsilon(1e-11).scale(1.0));
    }
  }
}

TEST_CASE("Appell closed form against the oracles") {
  const auto c2 = make_context(2);
  for (const auto& f : oracle::kFrozenN2) {
    const auto p = params_from_L(c2, f.L);
    if (!appell_applicable(c2, p)) continue;
    const auto g = green_appell(c2, p, f.theta, tight());
    CHECK(g.value == doctest::Approx(f.value).epsilon(1e-11));
  }
  const auto c3 = make_context(3);
  const auto p = params_from_L(c3, -1.2);
  CHECK(green_appell(c3, p, 2 * pi / 3).value ==
        doctest::Approx(green_integral(c3, p, 2 * pi / 3).value).epsilon(1e-8));
  // The four-term combination is real to rounding.
  const auto comb = appell_combination(c2, params_from_L(c2, -0.4), pi / 2);
  CHECK(std::abs(comb.value.imag()) < 1e-10);
}

TEST_CASE("Abel-summed series lands within its estimate") {
  const auto c2 = make_context(2);
  for (const auto& f : oracle::kFrozenN2) {
    const auto ev = green_series(c2, params_from_L(c2, f.L), f.theta, 0);
    CHECK(std::abs(ev.value - f.value) <= ev.error_estimate);
    CHECK(std::abs(ev.value - f.value) < 1e-4);
  }
  const auto c3 = make_context(3);
  for (const auto& f : oracle::kFrozenN3) {
    const auto ev = green_series(c3, params_from_L(c3, f.L), f.theta, 0);
    CHECK(std::abs(ev.value - f.value) <= ev.error_estimate);
  }
  const auto p2 = params_from_a(c2, 0.0);
  const auto s = green_series(c2, p2, pi / 2, 0);
  CHECK(s.value == doctest::Approx(oracle::poisson_n2(pi / 2)).epsilon(1e-6));
}

TEST_CASE("raw partial sums") {
  const auto c2 = make_context(2);
  const auto p = params_from_a(c2, 0.0);
  // Index set {1..lmax}; lmax = 0 leaves it empty.
  CHECK(green_series(c2, p, 1.0, 0, {}).value == 0.0);
  // At θ = π the S^2 partial sum telescopes to 1 - (-1)^N/(N+1), and G(π) = 1.
  for (int N : {1, 2, 17, 10000}) {
    const auto s = green_series(c2, p, pi, N, {});
    CHECK(s.value == doctest::Approx(1.0 - (N % 2 ? -1.0 : 1.0) / (N + 1.0)).epsilon(1e-13));
  }
  const auto far = green_series(c2, p, pi, 10000, {});
  CHECK(std::abs(far.value - green_integral(c2, p, pi).value) <= far.error_estimate);

  const auto c3 = make_context(3);
  const auto q = params_from_a(c3, -0.24);
  const double t = std::cos(0.9);
  double want = 0.0;
  for (int l = 0; l <= 3; ++l) {
    want += 1.0 / (-0.24 - l * (l + 2.0)) * zonal_term(c3, l, t);
  }
  CHECK(green_series(c3, q, 0.9, 3, {}).value == doctest::Approx(want).epsilon(1e-15));
  CHECK_THROWS_AS(green_series(c3, q, 0.9, -1, {}), ParameterError);
}

TEST_CASE("integrand behaviour") {
  const auto c2 = make_context(2);
  for (double L : {-0.4, 0.0, 1.0, 1.7}) {
    const auto p = params_from_L(c2, L);
    CHECK(std::abs(green_integrand(c2, p, 1.0 - 1e-6, 0.3)) < 1e-4);
  }
  const auto res = params_from_L(c2, 1.0);
  const double v = green_integrand(c2, res, 1e-4, 0.3);
  CHECK(std::isfinite(v));
  CHECK(std::abs(v) < 10.0);
}

TEST_CASE("moment identity worked values") {
  const auto c2 = make_context(2);
  auto m1 = moment_identity(c2, -0.4, 1);
  CHECK(m1.exact_value == doctest::Approx(-0.44642857142857142).epsilon(1e-15));
  CHECK(m1.quadrature_value == doctest::Approx(m1.exact_value).epsilon(1e-10));
  auto m0 = moment_identity(c2, -0.4, 0);
  CHECK(m0.exact_value == doctest::Approx(-25.0 / 6.0).epsilon(1e-15));
  CHECK(m0.quadrature_value == doctest::Approx(m0.exact_value).epsilon(1e-10));
  auto m4 = moment_identity(make_context(4), 0.5, 1);
  CHECK(m4.exact_value == doctest::Approx(-4.0 / 9.0).epsilon(1e-15));
  CHECK(m4.quadrature_value == doctest::Approx(m4.exact_value).epsilon(1e-10));
  CHECK_THROWS_AS(moment_identity(c2, 1.7, 1), PreconditionError);
}

TEST_CASE("route errors") {
  const auto c2 = make_context(2);
  const auto p = params_from_L(c2, -0.4);
  CHECK_THROWS_AS(green_integral(c2, p, 0.0), DomainError);
  CHECK_THROWS_AS(green_series(c2, p, 0.0, 10), DomainError);
  CHECK_THROWS_AS(green_appell(c2, p, 0.0), DomainError);
  CHECK_THROWS_AS(green_integral(c2, p, 3.2), DomainError);

  CHECK_THROWS_AS(green_integral(c2, params_from_L(c2, -0.5), 1.0), ExcludedParameter);
  CHECK_THROWS_AS(green_appell(c2, params_from_L(c2, -0.5), 1.0), ExcludedParameter);
  CHECK_THROWS_AS(green_integral(c2, params_from_a(c2, -3.0), 1.0), UnsupportedParameter);
  CHECK_THROWS_AS(green_appell(c2, params_from_L(c2, 0.3), 1.0), UnsupportedParameter);

  QuadratureConfig bad;
  bad.tol = 1e-16;
  CHECK_THROWS_AS(green_integral(c2, p, 1.0, bad), AccuracyError);
}

TEST_CASE("accuracy failures carry the best value") {
  const auto c2 = make_context(2);
  const auto p = params_from_L(c2, 1.7);
  QuadratureConfig qc;
  qc.max_levels = 1;
  qc.tol = 1e-14;
  try {
    green_integral(c2, p, 0.4, qc);
    FAIL("expected AccuracyError");
  } catch (const AccuracyError& e) {
    CHECK(std::isfinite(e.best_value()));
    CHECK(e.estimate() > 0.0);
  }
}
