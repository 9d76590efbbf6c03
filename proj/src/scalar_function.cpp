#include "tracelab/scalar_function.hpp"

#include <cmath>
#include <sstream>

#include "tracelab/errors.hpp"
#include "tracelab/quadrature.hpp"

namespace tracelab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("scalar function evaluated outside t > 0: t = " + std::to_string(t));
  }
}

// (t^p - s^p) / (t - s) without cancellation.
double power_divided_difference(double p, double t, double s) {
  if (p == 0.0) return 0.0;
  if (clustered(t, s)) return p * std::pow(0.5 * (t + s), p - 1.0);
  const double d = t - s;
  return std::pow(s, p) * std::expm1(p * std::log1p(d / s)) / d;
}

// Series of (e^y - 1)/y and its t-derivative for small y = log t.
double log_mean_generator_value(double t) {
  const double y = std::log(t);
  if (std::abs(y) < 1e-2) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 7; ++k) {
      term *= y / (k + 1);
      sum += term;
    }
    return sum;
  }
  return (t - 1.0) / y;
}

double log_mean_generator_derivative(double t) {
  const double y = std::log(t);
  if (std::abs(y) < 1e-2) {
    // (1/t) * sum_k y^k / (k! (k + 2))
    double fact = 1.0;
    double ypow = 1.0;
    double sum = 0.0;
    for (int k = 0; k <= 7; ++k) {
      if (k > 0) {
        fact *= k;
        ypow *= y;
      }
      sum += ypow / (fact * (k + 2));
    }
    return sum / t;
  }
  return (y - 1.0 + 1.0 / t) / (y * y);
}

}  // namespace

ScalarFunction ScalarFunction::power_plus_one_root(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw ArgumentError("PowerPlusOneRoot requires p > 0");
  }
  return ScalarFunction(PowerPlusOneRoot{p});
}

ScalarFunction ScalarFunction::weighted_power_root(double p, double w) {
  if (!(p > 0.0) || !std::isfinite(p)) throw ArgumentError("WeightedPowerRoot requires p > 0");
  if (!(w >= 0.0 && w <= 1.0)) throw ArgumentError("WeightedPowerRoot requires 0 <= w <= 1");
  return ScalarFunction(WeightedPowerRoot{p, w});
}

ScalarFunction ScalarFunction::power_mixture(std::vector<Atom> atoms) {
  if (atoms.empty()) throw ArgumentError("PowerMixture needs at least one atom");
  for (const auto& a : atoms) {
    if (!(a.weight > 0.0) || !std::isfinite(a.weight)) {
      throw ArgumentError("PowerMixture weights must be positive");
    }
    if (!(a.exponent >= 0.0 && a.exponent <= 1.0)) {
      throw ArgumentError("PowerMixture exponents must lie in [0, 1]");
    }
  }
  return ScalarFunction(PowerMixture{std::move(atoms)});
}

ScalarFunction ScalarFunction::lebesgue_mixture(int nodes) {
  const auto rule = gauss_legendre(nodes);
  std::vector<Atom> atoms;
  atoms.reserve(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    atoms.push_back({0.5 * rule.weights[i], 0.5 * (rule.nodes[i] + 1.0)});
  }
  return power_mixture(std::move(atoms));
}

double ScalarFunction::value(double t) const {
  require_positive(t);
  return std::visit(
      overloaded{
          [t](const Power& f) { return std::pow(t, f.p); },
          [t](const XLogX&) { return t * std::log(t); },
          [t](const Log&) { return std::log(t); },
          [t](const PowerPlusOneRoot& f) { return std::pow(std::pow(t, f.p) + 1.0, 1.0 / f.p); },
          [t](const WeightedPowerRoot& f) {
            return std::pow(f.w * std::pow(t, f.p) + 1.0 - f.w, 1.0 / f.p);
          },
          [t](const PowerMixture& f) {
            double sum = 0.0;
            for (const auto& a : f.atoms) sum += a.weight * std::pow(t, a.exponent);
            return sum;
          },
          [t](const LogMeanGenerator&) { return log_mean_generator_value(t); },
      },
      kind_);
}

double ScalarFunction::derivative(double t) const {
  require_positive(t);
  return std::visit(
      overloaded{
          [t](const Power& f) { return f.p == 0.0 ? 0.0 : f.p * std::pow(t, f.p - 1.0); },
          [t](const XLogX&) { return std::log(t) + 1.0; },
          [t](const Log&) { return 1.0 / t; },
          [t](const PowerPlusOneRoot& f) {
            const double inner = std::pow(t, f.p) + 1.0;
            return std::pow(inner, 1.0 / f.p - 1.0) * std::pow(t, f.p - 1.0);
          },
          [t](const WeightedPowerRoot& f) {
            const double inner = f.w * std::pow(t, f.p) + 1.0 - f.w;
            return std::pow(inner, 1.0 / f.p - 1.0) * f.w * std::pow(t, f.p - 1.0);
          },
          [t](const PowerMixture& f) {
            double sum = 0.0;
            for (const auto& a : f.atoms) {
              if (a.exponent != 0.0) sum += a.weight * a.exponent * std::pow(t, a.exponent - 1.0);
            }
            return sum;
          },
          [t](const LogMeanGenerator&) { return log_mean_generator_derivative(t); },
      },
      kind_);
}

double ScalarFunction::divided_difference(double t, double s) const {
  require_positive(t);
  require_positive(s);
  if (clustered(t, s)) return derivative(0.5 * (t + s));
  const double d = t - s;
  return std::visit(
      overloaded{
          [&](const Power& f) { return power_divided_difference(f.p, t, s); },
          [&](const XLogX&) { return t * std::log1p(d / s) / d + std::log(s); },
          [&](const Log&) { return std::log1p(d / s) / d; },
          [&](const PowerMixture& f) {
            double sum = 0.0;
            for (const auto& a : f.atoms) sum += a.weight * power_divided_difference(a.exponent, t, s);
            return sum;
          },
          [&](const auto&) { return (value(t) - value(s)) / d; },
      },
      kind_);
}

std::string ScalarFunction::name() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Power& f) { os << "power(" << f.p << ")"; },
                 [&](const XLogX&) { os << "xlogx"; },
                 [&](const Log&) { os << "log"; },
                 [&](const PowerPlusOneRoot& f) { os << "power_plus_one_root(" << f.p << ")"; },
                 [&](const WeightedPowerRoot& f) {
                   os << "weighted_power_root(" << f.p << "," << f.w << ")";
                 },
                 [&](const PowerMixture& f) { os << "power_mixture[" << f.atoms.size() << "]"; },
                 [&](const LogMeanGenerator&) { os << "log_mean_generator"; },
             },
             kind_);
  return os.str();
}

}  // namespace tracelab
