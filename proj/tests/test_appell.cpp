#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "sphgreen/appell.hpp"
#include "sphgreen/error.hpp"
#include "sphgreen/validation.hpp"

using namespace sphgreen;
using cplx = std::complex<double>;

TEST_CASE("normalization at the origin") {
  const F1Arguments z{1.3, 0.7, 2.1, 2.9, {0.0, 0.0}, {0.0, 0.0}};
  CHECK(std::abs(f1_double_series(z) - 1.0) < 1e-15);
  CHECK(std::abs(f1_integral(z) - 1.0) < 1e-12);
}

TEST_CASE("x = y collapses to 2F1") {
  const F1Arguments args{1.6, 1.5, 0.9, 2.6, {0.3, -0.2}, {0.3, -0.2}};
  const cplx ref = hyp2f1_series(1.6, 2.4, 2.6, {0.3, -0.2});
  CHECK(std::abs(f1_double_series(args) - ref) < 1e-10 * std::abs(ref));
  CHECK(std::abs(f1_integral(args) - ref) < 1e-10 * std::abs(ref));
}

TEST_CASE("2F1 oracle sanity") {
  // 2F1(1, 1; 2; z) = -log(1-z)/z
  const cplx z(0.4, 0.3);
  CHECK(std::abs(hyp2f1_series(1, 1, 2, z) + std::log(1.0 - z) / z) < 1e-14);
  CHECK_THROWS_AS(hyp2f1_series(1, 1, 2, cplx(1.0, 0.0)), DomainError);
}

TEST_CASE("swap symmetry") {
  const F1Arguments a{0.8, 1.1, 2.3, 3.0, {0.2, 0.5}, {-0.6, 0.1}};
  const F1Arguments b{0.8, 2.3, 1.1, 3.0, {-0.6, 0.1}, {0.2, 0.5}};
  CHECK(std::abs(f1_double_series(a) - f1_double_series(b)) < 1e-14);
}

TEST_CASE("series and integral agree inside the unit bidisc") {
  const F1Arguments a{1.6, 1.5, 1.5, 2.6, std::polar(0.3, std::numbers::pi / 3),
                      std::polar(0.3, -std::numbers::pi / 3)};
  CHECK(std::abs(f1_double_series(a) - f1_integral(a)) < 1e-9);
  // Conjugate arguments with β = β' give a real value.
  CHECK(std::abs(f1_double_series(a).imag()) < 1e-15);
}

TEST_CASE("integral route reaches the unit circle") {
  // γ = α + 1 and β = β' = 1: F1 = α ∫ u^{α-1} / |1 - u e^{iθ}|^2 du, real for conjugate x, y.
  const double th = 2.0;
  const cplx x = std::polar(1.0, th);
  const F1Arguments args{0.5, 1.0, 1.0, 1.5, x, std::conj(x)};
  const auto v = f1_integral_detail(args);
  CHECK(std::abs(v.value.imag()) < 1e-12);
  CHECK(v.value.real() > 0.0);
  CHECK(v.evaluations > 0);
}

TEST_CASE("argument checks") {
  const F1Arguments out{1.0, 1.0, 1.0, 2.0, {1.0, 0.0}, {0.2, 0.0}};
  CHECK_THROWS_AS(f1_double_series(out), DomainError);
  CHECK_THROWS_AS(f1_integral(out), DomainError);
  const F1Arguments bad_alpha{2.5, 1.0, 1.0, 2.0, {0.1, 0.0}, {0.2, 0.0}};
  CHECK_THROWS_AS(f1_integral(bad_alpha), ParameterError);
  const F1Arguments slow{1.0, 1.0, 1.0, 2.0, {0.999, 0.0}, {0.999, 0.0}};
  CHECK_THROWS_AS(f1_double_series(slow, 1e-15, 50), AccuracyError);
}
