#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <functional>
#include <string_view>

#include "tracelab/rng.hpp"
#include "tracelab/scalar_function.hpp"

namespace tracelab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Largest supported dimension.
inline constexpr Eigen::Index kMaxDim = 16;
/// Strict positive-definiteness floor on the smallest eigenvalue.
inline constexpr double kPositivityFloor = 1e-12;

/// Throws DomainError if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, std::string_view what);

double max_abs(const ComplexMatrix& m);

/// Spectral decomposition A = U diag(lambda) U*, lambda ascending.
struct EigenDecomposition {
  ComplexMatrix u;
  RealVector lambda;

  Eigen::Index dim() const { return lambda.size(); }
  ComplexMatrix reconstruct() const;
  /// U diag(g(lambda)) U*
  ComplexMatrix map(const std::function<double(double)>& g) const;
};

/// Complex Hermitian matrix. Construction symmetrizes (A + A*)/2 and rejects
/// inputs whose anti-Hermitian part exceeds 1e-8 (1 + max|A|).
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m);
  static HermitianMatrix identity(Eigen::Index n);
  static HermitianMatrix zero(Eigen::Index n);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  double trace() const { return m_.trace().real(); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a);

 private:
  struct Trusted {};
  HermitianMatrix(ComplexMatrix m, Trusted) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

EigenDecomposition eigh(const HermitianMatrix& a);

/// Strictly positive definite Hermitian matrix; carries its decomposition.
class PositiveMatrix {
 public:
  /// Throws DomainError when the smallest eigenvalue is <= kPositivityFloor.
  explicit PositiveMatrix(HermitianMatrix base);
  explicit PositiveMatrix(const ComplexMatrix& m) : PositiveMatrix(HermitianMatrix(m)) {}
  static PositiveMatrix identity(Eigen::Index n);
  static PositiveMatrix scalar(double value);

  const HermitianMatrix& hermitian() const noexcept { return base_; }
  const ComplexMatrix& matrix() const noexcept { return base_.matrix(); }
  const EigenDecomposition& eig() const noexcept { return eig_; }
  Eigen::Index dim() const noexcept { return base_.dim(); }
  double min_eigenvalue() const { return eig_.lambda(0); }
  double max_eigenvalue() const { return eig_.lambda(eig_.lambda.size() - 1); }

 private:
  HermitianMatrix base_;
  EigenDecomposition eig_;
};

/// U f(Lambda) U*.
HermitianMatrix apply_fn(const ScalarFunction& f, const PositiveMatrix& a);
/// Same, for a Hermitian argument; every kind lives on t > 0 so the smallest
/// eigenvalue must exceed kPositivityFloor.
HermitianMatrix apply_fn(const ScalarFunction& f, const HermitianMatrix& a);

/// True iff the smallest eigenvalue is >= -tol.
bool is_psd(const HermitianMatrix& a, double tol);
double min_eigenvalue(const HermitianMatrix& a);
double max_eigenvalue(const HermitianMatrix& a);
/// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);
/// Haar unitary via QR of a complex Gaussian with the R-diagonal phase fix.
ComplexMatrix random_unitary(Eigen::Index n, Rng& rng);
HermitianMatrix random_hermitian(Eigen::Index n, Rng& rng);
/// Spectrum log-uniform in [1/sqrt(cond_cap), sqrt(cond_cap)], Haar eigenbasis.
PositiveMatrix random_pd(Eigen::Index n, Rng& rng, double cond_cap);
/// G*G / |G*G| * scale with scale uniform in (0.05, 1], so the norm is <= 1.
HermitianMatrix random_psd_increment(Eigen::Index n, Rng& rng);

struct ContractionOptions {
  /// Target largest singular value.
  double top = 1.0 - 1e-6;
  /// Scaled isometry (all singular values == top) instead of a scaled Gaussian.
  bool flat = false;
};
ComplexMatrix random_contraction(Eigen::Index rows, Eigen::Index cols, Rng& rng,
                                 ContractionOptions options = {});

}  // namespace tracelab
