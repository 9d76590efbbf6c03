#pragma once

#include <functional>
#include <string>
#include <variant>

#include "tracelab/matcore.hpp"

namespace tracelab {

/// Real function g(t, s) on t, s > 0, applied to the commuting pair (L_A, R_B).
class BivariateFunction {
 public:
  /// s f(t / s)
  struct Perspective {
    ScalarFunction f;
  };
  /// (t^p + s^p)^(1/r)
  struct PowerSumRoot {
    double p;
    double r;
  };
  /// (t - s) / (t^p - s^p), t^(1-p)/p on the diagonal
  struct DividedDiff {
    double p;
  };
  /// (t - s) / (log t - log s), t on the diagonal
  struct LogMean {};
  /// t s
  struct Product {};
  /// f(t)
  struct LeftOnly {
    ScalarFunction f;
  };
  struct Custom {
    std::function<double(double, double)> g;
    std::string label = "custom";
  };

  using Kind = std::variant<Perspective, PowerSumRoot, DividedDiff, LogMean, Product, LeftOnly, Custom>;

  static BivariateFunction perspective(ScalarFunction f) { return BivariateFunction(Perspective{std::move(f)}); }
  static BivariateFunction power_sum_root(double p, double r);
  /// Requires p > 0.
  static BivariateFunction divided_diff(double p);
  static BivariateFunction log_mean() { return BivariateFunction(LogMean{}); }
  static BivariateFunction product() { return BivariateFunction(Product{}); }
  static BivariateFunction left_only(ScalarFunction f) { return BivariateFunction(LeftOnly{std::move(f)}); }
  static BivariateFunction custom(std::function<double(double, double)> g, std::string label = "custom") {
    return BivariateFunction(Custom{std::move(g), std::move(label)});
  }

  explicit BivariateFunction(Kind kind) : kind_(std::move(kind)) {}

  double operator()(double t, double s) const;
  const Kind& kind() const noexcept { return kind_; }
  std::string name() const;

 private:
  Kind kind_;
};

struct SpectralPair {
  const EigenDecomposition& left;
  const EigenDecomposition& right;
};

/// G_ij = g(lambda_i, mu_j); throws DomainError if any entry is not finite.
RealMatrix bivariate_grid(const BivariateFunction& g, const SpectralPair& spectra);

/// g(L_A, R_B)(K) = U_A [(U_A* K U_B) o G] U_B*, K is n x m for A n x n, B m x m.
ComplexMatrix bivariate_apply(const BivariateFunction& g, const PositiveMatrix& a,
                              const PositiveMatrix& b, const ComplexMatrix& k);

/// Tr K* g(L_A, R_B)(K) = sum_ij |(U_A* K U_B)_ij|^2 G_ij.
double trace_form(const BivariateFunction& g, const PositiveMatrix& a, const PositiveMatrix& b,
                  const ComplexMatrix& k);

}  // namespace tracelab
