#pragma once

#include <stdexcept>
#include <string>

namespace tracelab {

/// Input outside the domain of a functional (e.g. non-positive spectrum under log).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller passed parameters that violate a precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative routine hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature did not reach its target; carries the last error estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// An operator that must be inverted has a vanishing entry.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tracelab
