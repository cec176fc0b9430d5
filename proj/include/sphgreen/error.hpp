#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace sphgreen {

enum class ErrorKind {
  Dimension,
  Domain,
  Parameter,
  Accuracy,
  UnsupportedParameter,
  ExcludedParameter,
  Precondition,
  Compatibility,
  Internal,
};

const char* error_kind_name(ErrorKind kind) noexcept;

/// Shortest readable form of a real for error messages (%g).
inline std::string real_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

/// Base of every exception thrown by the library. The kind maps one-to-one
/// onto the status codes of the C interface.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& w) : Error(ErrorKind::Dimension, w) {}
};

class DomainError : public Error {
public:
  explicit DomainError(const std::string& w) : Error(ErrorKind::Domain, w) {}
};

class ParameterError : public Error {
public:
  explicit ParameterError(const std::string& w) : Error(ErrorKind::Parameter, w) {}
};

/// Raised when a numerical target cannot be met. Carries the best value that
/// was reached together with its error estimate.
class AccuracyError : public Error {
public:
  AccuracyError(const std::string& w, double best_value, double estimate)
      : Error(ErrorKind::Accuracy, w), best_value_(best_value), estimate_(estimate) {}

  double best_value() const noexcept { return best_value_; }
  double estimate() const noexcept { return estimate_; }

private:
  double best_value_;
  double estimate_;
};

class UnsupportedParameter : public Error {
public:
  explicit UnsupportedParameter(const std::string& w)
      : Error(ErrorKind::UnsupportedParameter, w) {}
};

class ExcludedParameter : public Error {
public:
  explicit ExcludedParameter(const std::string& w)
      : Error(ErrorKind::ExcludedParameter, w) {}
};

class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};

class CompatibilityError : public Error {
public:
  explicit CompatibilityError(const std::string& w) : Error(ErrorKind::Compatibility, w) {}
};

class InternalError : public Error {
public:
  explicit InternalError(const std::string& w) : Error(ErrorKind::Internal, w) {}
};

}  // namespace sphgreen
