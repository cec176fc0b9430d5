#include "doctest.h"

#include <cmath>
#include <numbers>

#include "sphgreen/error.hpp"
#include "sphgreen/gegenbauer.hpp"

using namespace sphgreen;

namespace {

struct Sum {
  double value;
  double magnitude;  // Σ |terms|, the scale of its rounding error
};

// C_l^λ(t) = Σ_k (-1)^k Γ(l-k+λ) / (Γ(λ) k! (l-2k)!) (2t)^(l-2k)
Sum explicit_sum(double lam, double t, int l) {
  Sum s{0.0, 0.0};
  for (int k = 0; 2 * k <= l; ++k) {
    const double lg = std::lgamma(l - k + lam) - std::lgamma(lam) - std::lgamma(k + 1.0) -
                      std::lgamma(l - 2.0 * k + 1.0);
    const double term = std::exp(lg) * std::pow(2.0 * t, l - 2 * k);
    s.value += (k % 2 ? -1.0 : 1.0) * term;
    s.magnitude += std::abs(term);
  }
  return s;
}

}  // namespace

TEST_CASE("recurrence matches the explicit sum") {
  for (double lam : {0.5, 1.0, 1.5, 2.0, 3.5}) {
    for (double t : {-0.9, -0.3, 0.0, 0.25, 0.6, 1.0}) {
      const auto seq = gegenbauer_eval(lam, t, 12);
      REQUIRE(seq.values.size() == 13);
      for (int l = 0; l <= 12; ++l) {
        const auto want = explicit_sum(lam, t, l);
        CHECK(std::abs(seq.values[static_cast<std::size_t>(l)] - want.value) <=
              1e-13 * want.magnitude);
      }
    }
  }
}

TEST_CASE("worked values") {
  CHECK(gegenbauer_eval(0.5, 0.6, 2).values[2] == doctest::Approx(0.04).epsilon(1e-15));
  CHECK(gegenbauer_eval(2.7, -0.33, 0).values[0] == 1.0);
  // λ = 1 is the Chebyshev U family: sin((l+1)θ)/sin θ.
  CHECK(gegenbauer_eval(1.0, std::cos(std::numbers::pi / 2), 2).values[2] ==
        doctest::Approx(-1.0).epsilon(1e-15));
  const double th = 0.7;
  const auto u = gegenbauer_eval(1.0, std::cos(th), 30);
  for (int l = 0; l <= 30; ++l) {
    CHECK(u.values[static_cast<std::size_t>(l)] ==
          doctest::Approx(std::sin((l + 1) * th) / std::sin(th)).epsilon(1e-12));
  }
}

TEST_CASE("parity and the maximum at t = 1") {
  for (double lam : {0.5, 1.5, 4.0}) {
    const auto plus = gegenbauer_eval(lam, 0.37, 40);
    const auto minus = gegenbauer_eval(lam, -0.37, 40);
    const auto one = gegenbauer_eval(lam, 1.0, 40);
    for (int l = 0; l <= 40; ++l) {
      const auto i = static_cast<std::size_t>(l);
      CHECK(minus.values[i] == doctest::Approx((l % 2 ? -1.0 : 1.0) * plus.values[i]));
      // C_l^λ(1) = Γ(l+2λ)/(l! Γ(2λ))
      const double at_one =
          std::exp(std::lgamma(l + 2 * lam) - std::lgamma(l + 1.0) - std::lgamma(2 * lam));
      CHECK(one.values[i] == doctest::Approx(at_one).epsilon(1e-12));
      CHECK(std::abs(plus.values[i]) <= one.values[i] * (1 + 1e-14));
    }
  }
}

TEST_CASE("zonal terms") {
  const auto c2 = make_context(2);
  const auto c3 = make_context(3);
  CHECK(zonal_term(c2, 0, 0.123) == 1.0);
  CHECK(zonal_term(c2, 1, 0.25) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(zonal_term(c3, 2, 1.0) == doctest::Approx(9.0).epsilon(1e-15));

  const auto zs = zonal_terms(c3, -0.4, 20);
  for (int l = 0; l <= 20; ++l) {
    CHECK(zs[static_cast<std::size_t>(l)] == doctest::Approx(zonal_term(c3, l, -0.4)));
  }
  for (int n : {2, 3, 4, 6}) {
    const auto ctx = make_context(n);
    for (int l : {0, 1, 5, 17}) {
      CHECK(zonal_term_at_pole(ctx, l) == doctest::Approx(zonal_term(ctx, l, 1.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("streaming recurrence agrees with the batch form") {
  GegenbauerRecurrence rec(1.5, -0.61);
  const auto seq = gegenbauer_eval(1.5, -0.61, 25);
  for (int l = 0; l <= 25; ++l) {
    if (l > 0) rec.advance();
    CHECK(rec.degree() == l);
    CHECK(rec.value() == seq.values[static_cast<std::size_t>(l)]);
    CHECK(rec.zonal() == doctest::Approx((1.5 + l) / 1.5 * seq.values[static_cast<std::size_t>(l)]));
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(gegenbauer_eval(0.5, 1.5, 3), DomainError);
  CHECK_THROWS_AS(gegenbauer_eval(0.5, -1.0000001, 3), DomainError);
  CHECK_THROWS_AS(gegenbauer_eval(0.0, 0.5, 3), ParameterError);
  CHECK_THROWS_AS(gegenbauer_eval(0.5, 0.5, -1), ParameterError);
}
