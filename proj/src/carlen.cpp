#include "tracelab/carlen.hpp"

#include <cmath>
#include <sstream>

#include "tracelab/errors.hpp"
#include "tracelab/superop.hpp"

namespace tracelab {

PRParams PRParams::concave(double p, double r) {
  if (!(p > 0.0 && p <= r && r <= 1.0)) {
    std::ostringstream os;
    os << "concave regime needs 0 < p <= r <= 1, got p=" << p << " r=" << r;
    throw ArgumentError(os.str());
  }
  return PRParams(p, r, Regime::Concave);
}

PRParams PRParams::convex(double p) {
  if (!(p >= 1.0 && p <= 2.0)) {
    throw ArgumentError("convex regime needs r = p in [1, 2], got p=" + std::to_string(p));
  }
  return PRParams(p, p, Regime::Convex);
}

double trace_pr(const PositiveMatrix& a, const PositiveMatrix& b, const PRParams& params) {
  if (a.dim() != b.dim()) throw ArgumentError("trace_pr: dimension mismatch");
  const auto pow_p = ScalarFunction::power(params.p());
  const HermitianMatrix sum = apply_fn(pow_p, a) + apply_fn(pow_p, b);
  const auto eig = eigh(sum);
  double total = 0.0;
  for (Eigen::Index i = 0; i < eig.dim(); ++i) {
    if (!(eig.lambda(i) > 0.0)) throw DomainError("trace_pr: A^p + B^p lost positivity");
    total += std::pow(eig.lambda(i), 1.0 / params.r());
  }
  return total;
}

double kform_pr(const PositiveMatrix& a, const PositiveMatrix& b, const ComplexMatrix& k,
                const PRParams& params) {
  if (a.dim() != b.dim()) throw ArgumentError("kform_pr: dimension mismatch");
  return trace_form(BivariateFunction::power_sum_root(params.p(), params.r()), a, b, k);
}

VariationalSides scalar_variational(double x, double y, double lam, double p) {
  if (!(x > 0.0 && y > 0.0)) throw ArgumentError("scalar_variational: x, y must be positive");
  if (!(lam > 0.0 && lam < 1.0)) throw ArgumentError("scalar_variational: lambda must lie in (0, 1)");
  if (!(p > 0.0 && p < 1.0)) throw ArgumentError("scalar_variational: p must lie in (0, 1)");
  const double e = (p - 1.0) / p;
  return {std::pow(std::pow(x, p) + std::pow(y, p), 1.0 / p),
          std::pow(lam, e) * x + std::pow(1.0 - lam, e) * y};
}

VariationalSides variational_bound(const PositiveMatrix& a, const PositiveMatrix& b,
                                   const HermitianMatrix& x, double p) {
  if (!(p > 0.0 && p < 1.0)) throw ArgumentError("variational_bound: p must lie in (0, 1)");
  if (a.dim() != b.dim() || a.dim() != x.dim()) {
    throw ArgumentError("variational_bound: dimension mismatch");
  }
  const auto eig = eigh(x);
  if (!(eig.lambda(0) > 1e-6 && eig.lambda(eig.dim() - 1) < 1.0 - 1e-6)) {
    std::ostringstream os;
    os << "variational_bound: spectrum of X must lie in (1e-6, 1 - 1e-6), got ["
       << eig.lambda(0) << ", " << eig.lambda(eig.dim() - 1) << "]";
    throw ArgumentError(os.str());
  }
  const double e = (p - 1.0) / p;
  const ComplexMatrix x_pow = eig.map([e](double t) { return std::pow(t, e); });
  const ComplexMatrix rest_pow = eig.map([e](double t) { return std::pow(1.0 - t, e); });
  const double rhs = (x_pow * a.matrix() + rest_pow * b.matrix()).trace().real();
  return {trace_pr(a, b, PRParams::concave(p, p)), rhs};
}

HermitianMatrix variational_witness(const PositiveMatrix& a, const PositiveMatrix& b, double p) {
  const auto pow_p = ScalarFunction::power(p);
  const HermitianMatrix ap = apply_fn(pow_p, a);
  const HermitianMatrix sum = ap + apply_fn(pow_p, b);
  const ComplexMatrix inv = apply_fn(ScalarFunction::power(-1.0), sum).matrix();
  const ComplexMatrix x = ap.matrix() * inv;
  // Hermitian only when A and B commute; symmetrize for the general case.
  return HermitianMatrix(ComplexMatrix(0.5 * (x + x.adjoint())));
}

HermitianMatrix random_unit_interval_matrix(Eigen::Index n, Rng& rng) {
  if (n < 1) throw ArgumentError("random_unit_interval_matrix: n must be >= 1");
  RealVector u(n);
  for (Eigen::Index i = 0; i < n; ++i) u(i) = rng.uniform(1e-3, 1.0 - 1e-3);
  const ComplexMatrix v = random_unitary(n, rng);
  return HermitianMatrix(ComplexMatrix(v * u.cast<Complex>().asDiagonal() * v.adjoint()));
}

}  // namespace tracelab
