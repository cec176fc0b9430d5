#pragma once
// Independent closed forms of G used as test oracles. None of these share
// code with the library.

#include <cmath>
#include <numbers>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// S^2, a = 0: G = 1 + ln((1 - cos θ)/2).
inline double poisson_n2(double theta) {
  const double s = std::sin(0.5 * theta);
  return 1.0 + std::log(s * s);
}

// S^3, a = 0: G = 1/4 - (π - θ) cot θ / 2; (π - θ) cot θ -> -1 at θ = π.
inline double poisson_n3(double theta) {
  if (theta == pi) return 0.75;
  return 0.25 - 0.5 * (pi - theta) / std::tan(theta);
}

// S^3, a = L(L+2), μ = L+1: G = -(π/2) sin(μ(π-θ)) / (sin θ sin μπ).
inline double helmholtz_n3(double L, double theta) {
  const double mu = L + 1.0;
  if (theta == pi) {
    return -(pi / 2) * mu / std::sin(mu * pi);
  }
  return -(pi / 2) * std::sin(mu * (pi - theta)) / (std::sin(theta) * std::sin(mu * pi));
}

// High-precision values of G on S^2 with a = ν(ν+1), from
// G = π P_ν(-cos θ)/sin(πν) evaluated at 40 digits.
struct Frozen {
  double L;
  double theta;
  double value;
};

inline constexpr Frozen kFrozenN2[] = {
    {-0.4, pi / 6, -5.7088247511147062337},
    {-0.4, pi / 2, -3.8742406943683824971},
    {-0.4, pi, -3.3032659991941240303},
    {0.3, pi / 3, 2.0130865916390593551},
    {1.7, 2 * pi / 3, -0.18067608656261207313},
    {-0.7, pi / 4, -5.579612470965074129},
};

// Same construction on S^3 (sine closed form, 40 digits).
inline constexpr Frozen kFrozenN3[] = {
    {-0.4, pi / 6, -3.3032659991941240303},
    {0.3, pi / 2, 1.7299881029405445455},
    {-1.2, 2 * pi / 3, -0.64157801025342639342},
    {1.7, pi / 3, 1.3178023753852450278},
    {-1.7, pi, -1.3591277271078263802},
};

}  // namespace oracle
