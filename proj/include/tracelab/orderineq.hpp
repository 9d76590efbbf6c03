#pragma once

#include "tracelab/harness.hpp"
#include "tracelab/matcore.hpp"

namespace tracelab {

/// Exponent q in [-1, 1].
class QParam {
 public:
  explicit QParam(double q);
  double value() const noexcept { return q_; }

 private:
  double q_;
};

/// psi(A) = q (A^(q-1) - K (K*AK)^(q-1) K*), K an n x m contraction.
/// q = 0 returns exact zeros.
HermitianMatrix psi(const PositiveMatrix& a, const ComplexMatrix& k, QParam q);

/// phi(A) = Tr (K*AK)^q - Tr A^q.
double phi_q(const PositiveMatrix& a, const ComplexMatrix& k, QParam q);

/// d phi(A) D = -Tr psi(A) D.
double phi_q_directional(const PositiveMatrix& a, const ComplexMatrix& k, QParam q,
                         const HermitianMatrix& d);

/// Spectral extremes of (K*AK)^s - K* A^s K. For s in [0, 1] the difference
/// should be PSD, for s in [1, 2] negative semidefinite; the violation is
/// normalized by 1 + |(K*AK)^s|.
PropertyReport jensen_contraction_check(const PositiveMatrix& a, const ComplexMatrix& k, double s,
                                        double tol = 1e-10);

}  // namespace tracelab
