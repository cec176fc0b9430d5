#include "sphgreen/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sphgreen/error.hpp"

namespace sphgreen {

void validate(const QuadratureConfig& qc) {
  if (!(qc.tol >= kMinQuadratureTolerance)) {
    throw AccuracyError("quadrature tolerance " + real_text(qc.tol) +
                            " is below the attainable floor " +
                            real_text(kMinQuadratureTolerance),
                        std::numeric_limits<double>::quiet_NaN(),
                        std::numeric_limits<double>::infinity());
  }
  if (qc.max_levels < 1 || qc.max_levels > 24) {
    throw ParameterError("quadrature max_levels must lie in [1, 24]");
  }
  if (!(qc.r_switch > 0.0 && qc.r_switch < 1.0)) {
    throw ParameterError("r_switch must lie in (0, 1)");
  }
}

namespace {

// Abscissae beyond |t| = 6 lie within 1e-275 of an endpoint.
constexpr double kTanhSinhHalfWidth = 6.0;
constexpr int kMinLevels = 3;

template <class T>
struct RawResult {
  T value{};
  double error = 0.0;
  double l1 = 0.0;
  long evaluations = 0;
  bool converged = false;
};

// Double-exponential rule on (0,1): x = (1 + tanh(π/2 sinh t)) / 2. The
// integrand receives (x, 1 - x), both computed without cancellation.
template <class T, class F>
RawResult<T> tanh_sinh_unit(const F& f, double tol, int max_levels) {
  using std::abs;
  RawResult<T> out;
  T sum{};
  double l1 = 0.0;

  auto add_node = [&](double t) {
    const double u = 0.5 * std::numbers::pi * std::sinh(t);
    const double e = std::exp(-2.0 * std::abs(u));
    const double small = e / (1.0 + e);  // distance to the nearer endpoint
    const double large = 1.0 / (1.0 + e);
    const double ch = std::cosh(u);
    const double w = 0.25 * std::numbers::pi * std::cosh(t) / (ch * ch);
    if (w == 0.0 || small == 0.0) {
      return;
    }
    const T v = t < 0.0 ? f(small, large) : f(large, small);
    ++out.evaluations;
    sum += w * v;
    l1 += w * abs(v);
  };

  // Level 0: unit spacing.
  for (double t = -kTanhSinhHalfWidth; t <= kTanhSinhHalfWidth; t += 1.0) {
    add_node(t);
  }
  double h = 1.0;
  T previous = h * sum;
  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    for (double t = h; t <= kTanhSinhHalfWidth; t += 2.0 * h) {
      add_node(t);
      add_node(-t);
    }
    const T current = h * sum;
    out.value = current;
    out.l1 = h * l1;
    out.error = abs(current - previous);
    previous = current;
    if (level >= kMinLevels && out.error <= tol * out.l1) {
      out.converged = true;
      break;
    }
  }
  if (max_levels < 1) {
    out.value = previous;
  }
  return out;
}

[[noreturn]] void rethrow_as_accuracy(const std::exception& e) {
  throw AccuracyError(std::string("quadrature failed: ") + e.what(),
                      std::numeric_limits<double>::quiet_NaN(),
                      std::numeric_limits<double>::infinity());
}

}  // namespace

QuadratureResult integrate_unit(const UnitIntegrand& f, const QuadratureConfig& qc) {
  validate(qc);
  QuadratureResult res;
  if (qc.scheme == QuadratureScheme::TanhSinh) {
    const auto raw = tanh_sinh_unit<double>(f, qc.tol, qc.max_levels);
    res.value = raw.value;
    res.error = raw.error;
    res.l1 = raw.l1;
    res.evaluations = raw.evaluations;
    res.converged = raw.converged && std::isfinite(raw.value);
    return res;
  }
  long count = 0;
  auto g = [&](double x) {
    ++count;
    return f(x, 1.0 - x);
  };
  try {
    res.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        g, 0.0, 1.0, static_cast<unsigned>(qc.max_levels), qc.tol, &res.error, &res.l1);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    rethrow_as_accuracy(e);
  }
  res.evaluations = count;
  res.converged = std::isfinite(res.value) && res.error <= qc.tol * res.l1;
  return res;
}

ComplexQuadratureResult integrate_unit_complex(const ComplexUnitIntegrand& f,
                                               const QuadratureConfig& qc) {
  validate(qc);
  ComplexQuadratureResult res;
  if (qc.scheme == QuadratureScheme::TanhSinh) {
    const auto raw = tanh_sinh_unit<std::complex<double>>(f, qc.tol, qc.max_levels);
    res.value = raw.value;
    res.error = raw.error;
    res.l1 = raw.l1;
    res.evaluations = raw.evaluations;
    res.converged = raw.converged && std::isfinite(std::abs(raw.value));
    return res;
  }
  long count = 0;
  auto g = [&](double x) {
    ++count;
    return f(x, 1.0 - x);
  };
  try {
    res.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        g, 0.0, 1.0, static_cast<unsigned>(qc.max_levels), qc.tol, &res.error, &res.l1);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    rethrow_as_accuracy(e);
  }
  res.evaluations = count;
  res.converged = std::isfinite(std::abs(res.value)) && res.error <= qc.tol * res.l1;
  return res;
}

}  // namespace sphgreen
