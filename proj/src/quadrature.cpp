#include "tracelab/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "tracelab/errors.hpp"

namespace tracelab {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw ArgumentError("Gauss-Legendre order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = n == 1 ? x : p1;
      const double pnm1 = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pnm1) / (x * x - 1.0);
      const double step = pn / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double composite_gauss(const std::function<double(double)>& f, double a, double b, int panels,
                       const GaussRule& rule, double grading) {
  if (panels < 1) throw ArgumentError("composite_gauss needs at least one panel");
  double total = 0.0;
  double left = a;
  for (int j = 1; j <= panels; ++j) {
    const double frac = std::pow(static_cast<double>(j) / panels, grading);
    const double right = a + (b - a) * frac;
    const double half = 0.5 * (right - left);
    const double mid = 0.5 * (right + left);
    double panel = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      panel += rule.weights[k] * f(mid + half * rule.nodes[k]);
    }
    total += half * panel;
    left = right;
  }
  return total;
}

}  // namespace tracelab
