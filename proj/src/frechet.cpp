#include "tracelab/frechet.hpp"

#include <cmath>
#include <sstream>

#include "tracelab/errors.hpp"
#include "tracelab/superop.hpp"

namespace tracelab {

namespace {

void check_dims(const PositiveMatrix& x, const HermitianMatrix& h) {
  if (x.dim() != h.dim()) {
    throw ArgumentError("Frechet layer: x is " + std::to_string(x.dim()) + "-dimensional but h is " +
                        std::to_string(h.dim()) + "-dimensional");
  }
}

ComplexMatrix rotate_in(const PositiveMatrix& x, const HermitianMatrix& h) {
  return x.eig().u.adjoint() * h.matrix() * x.eig().u;
}

HermitianMatrix rotate_out(const PositiveMatrix& x, const ComplexMatrix& m) {
  return HermitianMatrix(ComplexMatrix(x.eig().u * m * x.eig().u.adjoint()));
}

}  // namespace

LoewnerMatrix loewner(const ScalarFunction& f, const RealVector& spectrum) {
  const Eigen::Index n = spectrum.size();
  LoewnerMatrix out{RealMatrix(n, n), spectrum};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.entries(i, i) = f.derivative(spectrum(i));
    for (Eigen::Index j = 0; j < i; ++j) {
      const double v = f.divided_difference(spectrum(i), spectrum(j));
      out.entries(i, j) = v;
      out.entries(j, i) = v;
    }
  }
  return out;
}

HermitianMatrix frechet_diff(const ScalarFunction& f, const PositiveMatrix& x, const HermitianMatrix& h) {
  check_dims(x, h);
  const LoewnerMatrix l = loewner(f, x.eig().lambda);
  return rotate_out(x, rotate_in(x, h).cwiseProduct(l.entries.cast<Complex>()));
}

HermitianMatrix frechet_inv(const ScalarFunction& f, const PositiveMatrix& x, const HermitianMatrix& h) {
  check_dims(x, h);
  const LoewnerMatrix l = loewner(f, x.eig().lambda);
  const double scale = l.entries.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < l.dim(); ++i) {
    for (Eigen::Index j = 0; j < l.dim(); ++j) {
      if (!(std::abs(l.entries(i, j)) > 1e-14 * scale) || !std::isfinite(l.entries(i, j))) {
        std::ostringstream os;
        os << "frechet_inv(" << f.name() << "): Loewner entry (" << i << "," << j
           << ") = " << l.entries(i, j) << " is not invertible";
        throw SingularityError(os.str());
      }
    }
  }
  return rotate_out(x, rotate_in(x, h).cwiseQuotient(l.entries.cast<Complex>()));
}

double quad_form(const ScalarFunction& f, const PositiveMatrix& x, const HermitianMatrix& h) {
  check_dims(x, h);
  const LoewnerMatrix l = loewner(f, x.eig().lambda);
  return rotate_in(x, h).cwiseAbs2().cwiseProduct(l.entries).sum();
}

double quad_form_inv(const ScalarFunction& f, const PositiveMatrix& x, const HermitianMatrix& h) {
  const HermitianMatrix inv = frechet_inv(f, x, h);
  return (h.matrix() * inv.matrix()).trace().real();
}

double logmean_quad_form(const PositiveMatrix& x, const HermitianMatrix& h) {
  check_dims(x, h);
  return trace_form(BivariateFunction::log_mean(), x, x, h.matrix());
}

double logmean_quad_form_via_mixture(const PositiveMatrix& x, const HermitianMatrix& h, int nodes) {
  check_dims(x, h);
  const auto mix = ScalarFunction::lebesgue_mixture(nodes);
  const auto& atoms = std::get<ScalarFunction::PowerMixture>(mix.kind()).atoms;
  double total = 0.0;
  for (const auto& atom : atoms) {
    const ComplexMatrix left = apply_fn(ScalarFunction::power(atom.exponent), x).matrix();
    const ComplexMatrix right = apply_fn(ScalarFunction::power(1.0 - atom.exponent), x).matrix();
    total += atom.weight * (h.matrix() * left * h.matrix() * right).trace().real();
  }
  return total;
}

double divided_diff_trace(const PositiveMatrix& a, const PositiveMatrix& b, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw ArgumentError("divided_diff_trace: p must lie in (0, 1]");
  if (a.dim() != b.dim()) throw ArgumentError("divided_diff_trace: dimension mismatch");
  return trace_form(BivariateFunction::divided_diff(p), a, b,
                    ComplexMatrix::Identity(a.dim(), a.dim()));
}

double power_mixture_quad_form(const ScalarFunction& mix, const PositiveMatrix& x, const HermitianMatrix& h) {
  const auto* atoms = std::get_if<ScalarFunction::PowerMixture>(&mix.kind());
  if (atoms == nullptr) throw ArgumentError("power_mixture_quad_form: function is not a PowerMixture");
  double total = 0.0;
  for (const auto& atom : atoms->atoms) {
    total += atom.weight * quad_form(ScalarFunction::power(atom.exponent), x, h);
  }
  return total;
}

}  // namespace tracelab
