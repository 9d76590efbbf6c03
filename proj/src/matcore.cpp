#include "tracelab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tracelab/errors.hpp"

namespace tracelab {

void require_finite(const ComplexMatrix& m, std::string_view what) {
  if (!m.allFinite()) {
    throw DomainError(std::string(what) + ": matrix has non-finite entries");
  }
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

ComplexMatrix EigenDecomposition::reconstruct() const {
  return u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
}

ComplexMatrix EigenDecomposition::map(const std::function<double(double)>& g) const {
  RealVector mapped(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) mapped(i) = g(lambda(i));
  return u * mapped.cast<Complex>().asDiagonal() * u.adjoint();
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ArgumentError("HermitianMatrix must be square, got " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
  }
  require_finite(m, "HermitianMatrix");
  const double skew = max_abs(m - m.adjoint());
  if (skew > 1e-8 * (1.0 + max_abs(m))) {
    std::ostringstream os;
    os << "HermitianMatrix: input is not Hermitian (max |A - A*| = " << skew << ")";
    throw ArgumentError(os.str());
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index n) {
  return HermitianMatrix(ComplexMatrix::Identity(n, n), Trusted{});
}

HermitianMatrix HermitianMatrix::zero(Eigen::Index n) {
  return HermitianMatrix(ComplexMatrix::Zero(n, n), Trusted{});
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw ArgumentError("HermitianMatrix sum: dimension mismatch");
  return HermitianMatrix(a.m_ + b.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw ArgumentError("HermitianMatrix difference: dimension mismatch");
  return HermitianMatrix(a.m_ - b.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
  return HermitianMatrix(s * a.m_, HermitianMatrix::Trusted{});
}

EigenDecomposition eigh(const HermitianMatrix& a) {
  if (a.dim() == 0) return {ComplexMatrix(0, 0), RealVector(0)};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eigh: no convergence for " << a.dim() << "x" << a.dim()
       << " Hermitian matrix with max|a_ij| = " << max_abs(a.matrix());
    throw ConvergenceError(os.str());
  }
  return {solver.eigenvectors(), solver.eigenvalues()};
}

PositiveMatrix::PositiveMatrix(HermitianMatrix base) : base_(std::move(base)), eig_(eigh(base_)) {
  if (dim() == 0) throw ArgumentError("PositiveMatrix must have dimension >= 1");
  if (!(min_eigenvalue() > kPositivityFloor)) {
    std::ostringstream os;
    os << "PositiveMatrix: smallest eigenvalue " << min_eigenvalue() << " is not above "
       << kPositivityFloor;
    throw DomainError(os.str());
  }
}

PositiveMatrix PositiveMatrix::identity(Eigen::Index n) {
  return PositiveMatrix(HermitianMatrix::identity(n));
}

PositiveMatrix PositiveMatrix::scalar(double value) {
  return PositiveMatrix(ComplexMatrix::Constant(1, 1, Complex(value, 0.0)));
}

HermitianMatrix apply_fn(const ScalarFunction& f, const PositiveMatrix& a) {
  return HermitianMatrix(a.eig().map([&f](double t) { return f.value(t); }));
}

HermitianMatrix apply_fn(const ScalarFunction& f, const HermitianMatrix& a) {
  const auto eig = eigh(a);
  if (eig.dim() > 0 && !(eig.lambda(0) > kPositivityFloor)) {
    std::ostringstream os;
    os << "apply_fn(" << f.name() << "): eigenvalue " << eig.lambda(0)
       << " outside the domain t > " << kPositivityFloor;
    throw DomainError(os.str());
  }
  return HermitianMatrix(eig.map([&f](double t) { return f.value(t); }));
}

bool is_psd(const HermitianMatrix& a, double tol) { return min_eigenvalue(a) >= -tol; }

double min_eigenvalue(const HermitianMatrix& a) {
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(a.matrix(), Eigen::EigenvaluesOnly)
      .eigenvalues()
      .minCoeff();
}

double max_eigenvalue(const HermitianMatrix& a) {
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(a.matrix(), Eigen::EigenvaluesOnly)
      .eigenvalues()
      .maxCoeff();
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  const ComplexMatrix gram = m.rows() >= m.cols() ? ComplexMatrix(m.adjoint() * m)
                                                  : ComplexMatrix(m * m.adjoint());
  const double top = max_eigenvalue(HermitianMatrix(gram));
  return std::sqrt(std::max(top, 0.0));
}

ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  }
  return g;
}

ComplexMatrix random_unitary(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

HermitianMatrix random_hermitian(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = random_gaussian(n, n, rng);
  return HermitianMatrix(0.5 * (g + g.adjoint()));
}

PositiveMatrix random_pd(Eigen::Index n, Rng& rng, double cond_cap) {
  if (n < 1) throw ArgumentError("random_pd: n must be >= 1");
  if (!(cond_cap >= 1.0)) throw ArgumentError("random_pd: cond_cap must be >= 1");
  const double half_log = 0.5 * std::log(cond_cap);
  RealVector spectrum(n);
  for (Eigen::Index i = 0; i < n; ++i) spectrum(i) = std::exp(rng.uniform(-half_log, half_log));
  const ComplexMatrix u = random_unitary(n, rng);
  return PositiveMatrix(ComplexMatrix(u * spectrum.cast<Complex>().asDiagonal() * u.adjoint()));
}

HermitianMatrix random_psd_increment(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = random_gaussian(n, n, rng);
  const ComplexMatrix gram = g.adjoint() * g;
  const double top = max_eigenvalue(HermitianMatrix(gram));
  const double scale = rng.uniform(0.05, 1.0);
  return HermitianMatrix(ComplexMatrix(gram * (scale / top)));
}

ComplexMatrix random_contraction(Eigen::Index rows, Eigen::Index cols, Rng& rng,
                                 ContractionOptions options) {
  if (rows < 1 || cols < 1) throw ArgumentError("random_contraction: dimensions must be >= 1");
  if (!(options.top > 0.0 && options.top <= 1.0)) {
    throw ArgumentError("random_contraction: top singular value must lie in (0, 1]");
  }
  if (options.flat) {
    const Eigen::Index big = std::max(rows, cols);
    const ComplexMatrix u = random_unitary(big, rng);
    return options.top * u.topLeftCorner(rows, cols);
  }
  const ComplexMatrix g = random_gaussian(rows, cols, rng);
  return g * (options.top / spectral_norm(g));
}

}  // namespace tracelab
