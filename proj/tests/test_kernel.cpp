#include "doctest.h"

#include <cmath>
#include <numbers>

#include "sphgreen/error.hpp"
#include "sphgreen/gegenbauer.hpp"
#include "sphgreen/kernel.hpp"
#include "sphgreen/solver.hpp"

using namespace sphgreen;

TEST_CASE("closed-form Poisson kernel worked values") {
  const auto c2 = make_context(2);
  const double inv = 1.0 / (4 * std::numbers::pi);
  CHECK(poisson_kernel_closed(c2, 0.0, 0.3) == doctest::Approx(inv).epsilon(1e-15));
  CHECK(poisson_kernel_closed(c2, 0.5, -1.0) ==
        doctest::Approx(inv * 0.75 / std::pow(2.25, 1.5)).epsilon(1e-14));
  CHECK(poisson_kernel_closed(c2, 0.9, 1.0) ==
        doctest::Approx(inv * 0.19 / std::pow(0.01, 1.5)).epsilon(1e-12));
}

TEST_CASE("series agrees with the closed form") {
  const auto c2 = make_context(2);
  CHECK(poisson_kernel_series(c2, 0.9, std::cos(std::numbers::pi / 3), 400) ==
        doctest::Approx(poisson_kernel_closed(c2, 0.9, std::cos(std::numbers::pi / 3)))
            .epsilon(1e-10));
  for (int n : {2, 3, 5}) {
    const auto ctx = make_context(n);
    CHECK(poisson_kernel_series(ctx, 0.6, 0.2, 0) == doctest::Approx(1.0 / ctx.sigma));
    CHECK(poisson_kernel_series(ctx, 0.0, 0.2, 7) == doctest::Approx(1.0 / ctx.sigma));
  }
}

TEST_CASE("Poisson kernel integrates to one over the sphere") {
  // Zonal integrals over S^n reduce to Σ_{n-1} ∫ f(t)(1-t²)^{λ-1/2} dt; dividing by the
  // same integral of 1 removes Σ_{n-1}.
  for (int n : {2, 3, 4}) {
    const auto ctx = make_context(n);
    const auto rule = gauss_gegenbauer(ctx.lambda, 200);
    double kernel = 0.0;
    double ones = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      kernel += rule.weights[i] * poisson_kernel_closed(ctx, 0.5, rule.nodes[i]);
      ones += rule.weights[i];
    }
    CHECK(kernel / ones * ctx.sigma == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("tail bracket") {
  const auto c2 = make_context(2);
  const auto c3 = make_context(3);
  CHECK(kernel_tail_bracket(c2, 0.4, 0.1, -1) ==
        doctest::Approx(c2.sigma * poisson_kernel_closed(c2, 0.4, 0.1)).epsilon(1e-14));
  CHECK(kernel_tail_bracket(c3, 0.0, 0.1, 2) == 0.0);

  BracketConfig tail;
  tail.mode = BracketMode::Tail;
  BracketConfig sub;
  sub.mode = BracketMode::Subtraction;
  CHECK(std::abs(kernel_tail_bracket(c2, 0.3, 0.5, 2, tail) -
                 kernel_tail_bracket(c2, 0.3, 0.5, 2, sub)) < 1e-12);
  for (int M : {0, 1, 3, 6}) {
    for (double r : {0.2, 0.45}) {
      const double a = kernel_tail_bracket(c3, r, -0.7, M, tail);
      const double b = kernel_tail_bracket(c3, r, -0.7, M, sub);
      CHECK(a == doctest::Approx(b).epsilon(1e-9).scale(1e-3));
    }
  }
}

TEST_CASE("scaled bracket stays bounded as r -> 0") {
  // bracket / r^{M+1} -> z_{M+1}(t) at r = 0.
  for (int n : {2, 3, 4}) {
    const auto ctx = make_context(n);
    for (int M : {0, 2, 5}) {
      for (double t : {-0.8, 0.3, 0.95}) {
        const double small =
            scaled_tail_bracket(ctx, Radius::from_r(1e-9), ZonalAngle::from_t(t), M);
        CHECK(small == doctest::Approx(zonal_term(ctx, M + 1, t)).epsilon(1e-6).scale(1.0));
      }
    }
  }
}

TEST_CASE("kernel argument checks") {
  const auto c2 = make_context(2);
  CHECK_THROWS_AS(poisson_kernel_closed(c2, 1.0, 0.3), DomainError);
  CHECK_THROWS_AS(poisson_kernel_closed(c2, -0.1, 0.3), DomainError);
  CHECK_THROWS_AS(poisson_kernel_closed(c2, 0.5, 1.2), DomainError);
  BracketConfig tiny;
  tiny.mode = BracketMode::Tail;
  tiny.lmax_tail = 5;
  CHECK_THROWS_AS(kernel_tail_bracket(c2, 0.45, 0.9, 1, tiny), AccuracyError);
}
