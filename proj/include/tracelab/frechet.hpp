#pragma once

#include "tracelab/matcore.hpp"

namespace tracelab {

/// First divided differences of f on a spectrum; the diagonal holds f'.
struct LoewnerMatrix {
  RealMatrix entries;
  RealVector spectrum;
  Eigen::Index dim() const { return spectrum.size(); }
};

LoewnerMatrix loewner(const ScalarFunction& f, const RealVector& spectrum);

/// df(x)h = U [(U* h U) o L_f(lambda)] U*.
HermitianMatrix frechet_diff(const ScalarFunction& f, const PositiveMatrix& x, const HermitianMatrix& h);

/// df(x)^(-1)h, the Hadamard quotient by the Loewner matrix.
/// Throws SingularityError if any Loewner entry vanishes.
HermitianMatrix frechet_inv(const ScalarFunction& f, const PositiveMatrix& x, const HermitianMatrix& h);

/// Tr h df(x)h = sum_ij |(U* h U)_ij|^2 L_ij.
double quad_form(const ScalarFunction& f, const PositiveMatrix& x, const HermitianMatrix& h);

/// Tr h df(x)^(-1)h = sum_ij |(U* h U)_ij|^2 / L_ij.
double quad_form_inv(const ScalarFunction& f, const PositiveMatrix& x, const HermitianMatrix& h);

/// Tr h dlog(x)^(-1)h = Tr h g(L_x, R_x)h with g the logarithmic mean.
double logmean_quad_form(const PositiveMatrix& x, const HermitianMatrix& h);

/// Tr h g(L_x, R_x)h with g(t, s) = s f(t/s) for f = (t - 1)/log t written as the
/// Gauss-Legendre power mixture sum_k w_k t^(p_k), i.e. sum_k w_k Tr h x^(p_k) h x^(1 - p_k).
double logmean_quad_form_via_mixture(const PositiveMatrix& x, const HermitianMatrix& h, int nodes = 64);

/// Tr g(L_A, R_B)(I) with g(t, s) = (t - s)/(t^p - s^p).
double divided_diff_trace(const PositiveMatrix& a, const PositiveMatrix& b, double p);

/// sum_k w_k quad_form(t^(p_k), x, h); `mix` must be a PowerMixture.
double power_mixture_quad_form(const ScalarFunction& mix, const PositiveMatrix& x, const HermitianMatrix& h);

}  // namespace tracelab
