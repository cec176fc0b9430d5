#pragma once

#include <vector>

#include "sphgreen/sphere_params.hpp"

namespace sphgreen {

/// C_0^λ(t) .. C_lmax^λ(t) from the forward three-term recurrence
///   l C_l = 2(l+λ-1) t C_{l-1} - (l+2λ-2) C_{l-2}.
struct GegenbauerSequence {
  double lambda = 0.5;
  double t = 0.0;
  std::vector<double> values;
};

GegenbauerSequence gegenbauer_eval(double lambda, double t, int lmax);

/// ((λ+l)/λ) C_l^λ(t), the normalized zonal building block.
double zonal_term(const SphereContext& ctx, int l, double t);

/// zonal_term for l = 0..lmax in one pass.
std::vector<double> zonal_terms(const SphereContext& ctx, double t, int lmax);

/// zonal_term at t = 1, i.e. ((λ+l)/λ) (2λ)_l / l!. Bounds |zonal_term| on [-1,1].
double zonal_term_at_pole(const SphereContext& ctx, int l);

/// Streaming form of the recurrence for consumers that do not know lmax in
/// advance. value() is C_l^λ(t) for the current l.
class GegenbauerRecurrence {
public:
  GegenbauerRecurrence(double lambda, double t) : lambda_(lambda), t_(t) {}

  int degree() const noexcept { return l_; }
  double value() const noexcept { return cur_; }
  /// ((λ+l)/λ) C_l^λ(t)
  double zonal() const noexcept { return (lambda_ + l_) / lambda_ * cur_; }

  void advance() noexcept {
    const int l = l_ + 1;
    const double next = l == 1
        ? 2.0 * lambda_ * t_
        : (2.0 * (l + lambda_ - 1.0) * t_ * cur_ - (l + 2.0 * lambda_ - 2.0) * prev_) / l;
    prev_ = cur_;
    cur_ = next;
    l_ = l;
  }

private:
  double lambda_;
  double t_;
  int l_ = 0;
  double cur_ = 1.0;
  double prev_ = 0.0;
};

}  // namespace sphgreen
