#pragma once

#include "tracelab/matcore.hpp"

namespace tracelab {

/// Exponents of Tr(A^p + B^p)^(1/r). Concave regime: 0 < p <= r <= 1.
/// Convex regime: r = p in [1, 2].
class PRParams {
 public:
  enum class Regime { Concave, Convex };

  static PRParams concave(double p, double r);
  static PRParams convex(double p);

  double p() const noexcept { return p_; }
  double r() const noexcept { return r_; }
  Regime regime() const noexcept { return regime_; }

 private:
  PRParams(double p, double r, Regime regime) : p_(p), r_(r), regime_(regime) {}
  double p_;
  double r_;
  Regime regime_;
};

/// Tr(A^p + B^p)^(1/r) via two nested eigendecompositions.
double trace_pr(const PositiveMatrix& a, const PositiveMatrix& b, const PRParams& params);

/// Tr K*(L_A^p + R_B^p)^(1/r)(K), the superoperator value. Not equal to
/// trace_pr at K = I unless A and B commute.
double kform_pr(const PositiveMatrix& a, const PositiveMatrix& b, const ComplexMatrix& k,
                const PRParams& params);

struct VariationalSides {
  double lhs;
  double rhs;
};

/// lhs = (x^p + y^p)^(1/p), rhs = lam^((p-1)/p) x + (1-lam)^((p-1)/p) y.
VariationalSides scalar_variational(double x, double y, double lam, double p);

/// lhs = Tr(A^p + B^p)^(1/p), rhs = Tr(X^((p-1)/p) A + (1 - X)^((p-1)/p) B).
/// X must have spectrum inside (1e-6, 1 - 1e-6).
VariationalSides variational_bound(const PositiveMatrix& a, const PositiveMatrix& b,
                                   const HermitianMatrix& x, double p);

/// X = A^p (A^p + B^p)^(-1), the equality point when A and B commute.
HermitianMatrix variational_witness(const PositiveMatrix& a, const PositiveMatrix& b, double p);

/// V diag(u) V* with u_i uniform in (1e-3, 1 - 1e-3) and V Haar.
HermitianMatrix random_unit_interval_matrix(Eigen::Index n, Rng& rng);

}  // namespace tracelab
