#include "tracelab/orderineq.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tracelab/errors.hpp"

namespace tracelab {

namespace {

void check_contraction(const PositiveMatrix& a, const ComplexMatrix& k) {
  if (k.rows() != a.dim()) throw ArgumentError("K must have as many rows as A");
  require_finite(k, "contraction K");
  const double top = spectral_norm(k);
  if (top > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "K is not a contraction: largest singular value " << top;
    throw ArgumentError(os.str());
  }
}

PositiveMatrix compress(const PositiveMatrix& a, const ComplexMatrix& k) {
  const HermitianMatrix kak(ComplexMatrix(k.adjoint() * a.matrix() * k));
  const double low = min_eigenvalue(kak);
  if (!(low > kPositivityFloor)) {
    std::ostringstream os;
    os << "K*AK is singular: smallest eigenvalue " << low;
    throw DomainError(os.str());
  }
  return PositiveMatrix(kak);
}

double trace_power(const PositiveMatrix& m, double q) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.dim(); ++i) sum += std::pow(m.eig().lambda(i), q);
  return sum;
}

}  // namespace

QParam::QParam(double q) : q_(q) {
  if (!(q >= -1.0 && q <= 1.0)) throw ArgumentError("q must lie in [-1, 1], got " + std::to_string(q));
}

HermitianMatrix psi(const PositiveMatrix& a, const ComplexMatrix& k, QParam q) {
  check_contraction(a, k);
  if (q.value() == 0.0) return HermitianMatrix::zero(a.dim());
  const PositiveMatrix kak = compress(a, k);
  const auto pow = ScalarFunction::power(q.value() - 1.0);
  const ComplexMatrix inner = k * apply_fn(pow, kak).matrix() * k.adjoint();
  return HermitianMatrix(ComplexMatrix(q.value() * (apply_fn(pow, a).matrix() - inner)));
}

double phi_q(const PositiveMatrix& a, const ComplexMatrix& k, QParam q) {
  check_contraction(a, k);
  if (q.value() == 0.0) return static_cast<double>(k.cols() - a.dim());
  return trace_power(compress(a, k), q.value()) - trace_power(a, q.value());
}

double phi_q_directional(const PositiveMatrix& a, const ComplexMatrix& k, QParam q,
                         const HermitianMatrix& d) {
  if (d.dim() != a.dim()) throw ArgumentError("phi_q_directional: D has the wrong dimension");
  return -(psi(a, k, q).matrix() * d.matrix()).trace().real();
}

PropertyReport jensen_contraction_check(const PositiveMatrix& a, const ComplexMatrix& k, double s,
                                        double tol) {
  if (!(s >= 0.0 && s <= 2.0)) throw ArgumentError("jensen_contraction_check: s must lie in [0, 2]");
  check_contraction(a, k);
  const PositiveMatrix kak = compress(a, k);
  const auto pow = ScalarFunction::power(s);
  const HermitianMatrix outer = apply_fn(pow, kak);
  const HermitianMatrix inner(ComplexMatrix(k.adjoint() * apply_fn(pow, a).matrix() * k));
  const auto eig = eigh(outer - inner);
  const double low = eig.lambda(0);
  const double high = eig.lambda(eig.dim() - 1);
  const double scale = 1.0 + max_abs(outer.matrix());
  double violation = 0.0;
  if (s <= 1.0) violation = std::max(violation, -low);
  if (s >= 1.0) violation = std::max(violation, high);

  PropertyReport report;
  report.suite = "jensen_contraction";
  report.claim = Claim::PSD;
  report.trials = 1;
  report.dim = static_cast<std::size_t>(a.dim());
  report.tolerance = tol;
  report.max_violation = violation / scale;
  report.witness = {{"s", s},
                    {"min_eigenvalue", low},
                    {"max_eigenvalue", high},
                    {"a", matrix_to_json(a.matrix())},
                    {"k", matrix_to_json(k)}};
  report.finalize();
  return report;
}

}  // namespace tracelab
