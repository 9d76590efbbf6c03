#pragma once

#include <string>
#include <variant>
#include <vector>

namespace tracelab {

/// Descriptor for a real function on t > 0 with closed-form value and
/// first derivative. All kinds are evaluated exactly; nothing is tabulated.
class ScalarFunction {
 public:
  /// t^p
  struct Power {
    double p;
  };
  /// t log t
  struct XLogX {};
  /// log t
  struct Log {};
  /// (t^p + 1)^(1/p)
  struct PowerPlusOneRoot {
    double p;
  };
  /// (w t^p + 1 - w)^(1/p), 0 <= w <= 1
  struct WeightedPowerRoot {
    double p;
    double w;
  };
  struct Atom {
    double weight;
    double exponent;
  };
  /// sum_k w_k t^(p_k); discretizes a positive measure on [0, 1].
  struct PowerMixture {
    std::vector<Atom> atoms;
  };
  /// (t - 1) / log t, i.e. the integral of t^p over p in [0, 1].
  struct LogMeanGenerator {};

  using Kind = std::variant<Power, XLogX, Log, PowerPlusOneRoot, WeightedPowerRoot, PowerMixture,
                            LogMeanGenerator>;

  static ScalarFunction power(double p) { return ScalarFunction(Power{p}); }
  static ScalarFunction xlogx() { return ScalarFunction(XLogX{}); }
  static ScalarFunction log() { return ScalarFunction(Log{}); }
  static ScalarFunction power_plus_one_root(double p);
  static ScalarFunction weighted_power_root(double p, double w);
  /// Throws ArgumentError unless every weight is > 0 and every exponent lies in [0, 1].
  static ScalarFunction power_mixture(std::vector<Atom> atoms);
  /// Gauss-Legendre discretization of Lebesgue measure on [0, 1].
  static ScalarFunction lebesgue_mixture(int nodes);
  static ScalarFunction log_mean_generator() { return ScalarFunction(LogMeanGenerator{}); }

  explicit ScalarFunction(Kind kind) : kind_(std::move(kind)) {}

  double value(double t) const;
  double derivative(double t) const;
  /// (f(t) - f(s)) / (t - s), with f'((t+s)/2) once |t - s| <= 1e-7 max(t, s).
  double divided_difference(double t, double s) const;

  const Kind& kind() const noexcept { return kind_; }
  std::string name() const;

 private:
  Kind kind_;
};

/// Relative gap below which divided differences fall back to the derivative.
inline constexpr double kClusterTolerance = 1e-7;

inline bool clustered(double t, double s) {
  const double scale = t > s ? t : s;
  const double gap = t > s ? t - s : s - t;
  return gap <= kClusterTolerance * scale;
}

}  // namespace tracelab
