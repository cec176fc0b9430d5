#include "doctest.h"

#include <cmath>
#include <numbers>

#include "sphgreen/error.hpp"
#include "sphgreen/sphere_params.hpp"

using namespace sphgreen;

TEST_CASE("context: order and surface measure") {
  const auto c2 = make_context(2);
  CHECK(c2.lambda == 0.5);
  CHECK(c2.sigma == doctest::Approx(4 * std::numbers::pi).epsilon(1e-15));
  const auto c3 = make_context(3);
  CHECK(c3.lambda == 1.0);
  CHECK(c3.sigma == doctest::Approx(2 * std::numbers::pi * std::numbers::pi).epsilon(1e-15));
  // S^4 has area 8π²/3.
  CHECK(make_context(4).sigma ==
        doctest::Approx(8 * std::numbers::pi * std::numbers::pi / 3).epsilon(1e-14));
  CHECK_THROWS_AS(make_context(1), DimensionError);
  CHECK_THROWS_AS(make_context(0), DimensionError);
}

TEST_CASE("params_from_a: root pairs and classification") {
  const auto c2 = make_context(2);

  const auto res = params_from_a(c2, 6.0);
  CHECK(res.kind == ParameterKind::Resonant);
  CHECK(res.L == 2.0);
  CHECK(res.L_prime == -3.0);
  CHECK(res.L0 == 2);
  CHECK(res.resonant_mode() == 2);

  const auto nr = params_from_a(c2, -0.24);
  CHECK(nr.kind == ParameterKind::NonResonant);
  CHECK(nr.L == doctest::Approx(-0.4).epsilon(1e-14));
  CHECK(nr.L_prime == doctest::Approx(-0.6).epsilon(1e-14));
  CHECK(nr.L0 == -1);
  CHECK(nr.resonant_mode() == -1);

  const auto po = params_from_a(c2, 0.0);
  CHECK(po.kind == ParameterKind::Poisson);
  CHECK(po.L == 0.0);
  CHECK(po.L0 == 0);
  CHECK(po.resonant_mode() == 0);

  CHECK(params_from_a(make_context(3), -1.5).kind == ParameterKind::ComplexL);
  // Boundary of the real-root region: a = -(n-1)^2/4 is the excluded double root.
  const auto edge = params_from_a(make_context(3), -1.0);
  CHECK(edge.kind != ParameterKind::ComplexL);
  CHECK(edge.excluded);
}

TEST_CASE("params_from_a: a close to an eigenvalue snaps to it") {
  const auto c3 = make_context(3);
  const auto p = params_from_a(c3, 8.0 + 1e-12);
  CHECK(p.kind == ParameterKind::Resonant);
  CHECK(p.a == 8.0);
  CHECK(p.L == 2.0);
  CHECK(params_from_a(c3, 8.0 + 1e-3).kind == ParameterKind::NonResonant);
}

TEST_CASE("params_from_L") {
  const auto c2 = make_context(2);
  CHECK(params_from_L(c2, -0.4).a == doctest::Approx(-0.24).epsilon(1e-15));

  const auto ex = params_from_L(c2, -0.5);
  CHECK(ex.a == doctest::Approx(-0.25));
  CHECK(ex.excluded);

  const auto p4 = params_from_L(make_context(4), 2.5);
  CHECK(p4.a == doctest::Approx(13.75).epsilon(1e-15));
  CHECK(p4.L0 == 2);

  // The supplied root is kept even when it is the smaller one.
  const auto small = params_from_L(c2, -0.6);
  CHECK(small.L == -0.6);
  CHECK(small.L_prime == doctest::Approx(-0.4).epsilon(1e-15));
}

TEST_CASE("both roots give the same shift") {
  for (int n : {2, 3, 4, 5, 7}) {
    const auto ctx = make_context(n);
    for (double L : {-0.4, 0.3, 1.7, -2.25, 3.9}) {
      const auto p = params_from_L(ctx, L);
      const auto q = params_from_L(ctx, 1.0 - n - L);
      CHECK(p.a == doctest::Approx(q.a).epsilon(1e-14));
      CHECK(p.L0 == q.L0);
    }
  }
}

TEST_CASE("truncation index and coefficients") {
  CHECK(truncation_index(2, -0.4) == -1);
  CHECK(truncation_index(2, 2.0) == 2);
  CHECK(truncation_index(4, 2.5) == 2);
  CHECK(truncation_index(3, -2.5) == 0);  // max(floor(-2.5), floor(0.5))
  const auto c2 = make_context(2);
  CHECK(green_coefficient(c2, 5.0, 3) == doctest::Approx(-1.0 / 7.0).epsilon(1e-15));
  CHECK(green_coefficient(c2, 0.0, 2) == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
  CHECK(eigenvalue(3, 2) == 8.0);
}
