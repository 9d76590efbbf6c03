#pragma once

#include <functional>
#include <vector>

namespace tracelab {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, n >= 1. Nodes ascending.
GaussRule gauss_legendre(int n);

/// Composite Gauss-Legendre over [a, b] with `panels` panels whose breakpoints
/// are a + (b - a) * (j / panels)^grading; grading > 1 clusters panels at a.
/// Panels are summed in a fixed order.
double composite_gauss(const std::function<double(double)>& f, double a, double b, int panels,
                       const GaussRule& rule, double grading = 1.0);

}  // namespace tracelab
