#pragma once

#include "tracelab/harness.hpp"
#include "tracelab/matcore.hpp"

namespace tracelab {

/// Composite Gauss-Legendre settings for the representing-measure integrals.
struct QuadratureSpec {
  int panels = 8;
  int nodes_per_panel = 16;
  /// Boundary between the (0, split] region and the tail.
  double split_point = 1.0;
  double target_rel_err = 1e-10;
  /// Number of panel doublings before giving up.
  int max_doublings = 10;

  /// Throws ArgumentError unless panels >= 4, nodes >= 8, target >= 1e-10, split > 0.
  void validate() const;
};

/// A_p(r, theta) = (1/p) arg(r^p cos(p theta) + 1 + i r^p sin(p theta)), arg in [0, 2 pi).
double angle_Ap(double r, double theta, double p);

/// h_p(lam) = (1/pi) (1 + lam^(2p) + 2 lam^p cos(p pi))^(1/(2p)) sin A_p(lam, pi); zero at p = 1.
double weight_hp(double lam, double p);

/// beta with 1 = beta + int_0^inf (lam/(1+lam^2) - 1/lam) h_p(lam) dlam.
/// Throws QuadratureError when panel doubling does not settle.
double beta_const(double p, const QuadratureSpec& q = {});

/// beta + t + int_0^inf (lam/(1+lam^2) - 1/(t+lam)) h_p(lam) dlam.
double eval_integral_rep(double t, double p, const QuadratureSpec& q = {});

/// (t^p + 1)^(1/p) including t = 0.
double proot_closed_form(double t, double p);

struct IdentitySides {
  double lhs;
  double rhs;
};

/// lhs = (t - s)/(t^p - s^p), rhs = (1/p) int_0^1 (lam t^p + (1-lam) s^p)^((1-p)/p) dlam.
IdentitySides divided_diff_identity(double t, double s, double p, const QuadratureSpec& q = {});

/// Samples A and A + D (D PSD) and records how far f(A + D) - f(A) dips below zero.
PropertyReport op_monotone_check(const ScalarFunction& f, std::size_t n, std::size_t trials,
                                 const Rng& rng, double tol = 1e-9, const HarnessOptions& options = {});

/// Samples A, B and records how far lam f(A) + (1-lam) f(B) - f(lam A + (1-lam) B) dips below zero.
PropertyReport op_convex_check(const ScalarFunction& f, std::size_t n, std::size_t trials,
                               const Rng& rng, double tol = 1e-9, const HarnessOptions& options = {});

}  // namespace tracelab
