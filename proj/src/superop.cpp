#include "tracelab/superop.hpp"

#include <cmath>
#include <sstream>

#include "tracelab/errors.hpp"

namespace tracelab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_shapes(const PositiveMatrix& a, const PositiveMatrix& b, const ComplexMatrix& k) {
  if (k.rows() != a.dim() || k.cols() != b.dim()) {
    std::ostringstream os;
    os << "superoperator: K is " << k.rows() << "x" << k.cols() << " but A is " << a.dim() << "x"
       << a.dim() << " and B is " << b.dim() << "x" << b.dim();
    throw ArgumentError(os.str());
  }
  require_finite(k, "superoperator argument K");
}

}  // namespace

BivariateFunction BivariateFunction::power_sum_root(double p, double r) {
  if (!(p > 0.0) || !(r > 0.0)) throw ArgumentError("PowerSumRoot requires p, r > 0");
  return BivariateFunction(PowerSumRoot{p, r});
}

BivariateFunction BivariateFunction::divided_diff(double p) {
  if (!(p > 0.0)) throw ArgumentError("DividedDiff requires p > 0");
  return BivariateFunction(DividedDiff{p});
}

double BivariateFunction::operator()(double t, double s) const {
  if (!(t > 0.0) || !(s > 0.0)) {
    std::ostringstream os;
    os << name() << ": arguments must be positive, got (" << t << ", " << s << ")";
    throw DomainError(os.str());
  }
  return std::visit(
      overloaded{
          [&](const Perspective& g) { return s * g.f.value(t / s); },
          [&](const PowerSumRoot& g) {
            return std::pow(std::pow(t, g.p) + std::pow(s, g.p), 1.0 / g.r);
          },
          [&](const DividedDiff& g) {
            if (clustered(t, s)) return std::pow(0.5 * (t + s), 1.0 - g.p) / g.p;
            const double d = t - s;
            return d / (std::pow(s, g.p) * std::expm1(g.p * std::log1p(d / s)));
          },
          [&](const LogMean&) {
            if (clustered(t, s)) return 0.5 * (t + s);
            const double d = t - s;
            return d / std::log1p(d / s);
          },
          [&](const Product&) { return t * s; },
          [&](const LeftOnly& g) { return g.f.value(t); },
          [&](const Custom& g) { return g.g(t, s); },
      },
      kind_);
}

std::string BivariateFunction::name() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Perspective& g) { os << "perspective(" << g.f.name() << ")"; },
                 [&](const PowerSumRoot& g) { os << "power_sum_root(" << g.p << "," << g.r << ")"; },
                 [&](const DividedDiff& g) { os << "divided_diff(" << g.p << ")"; },
                 [&](const LogMean&) { os << "log_mean"; },
                 [&](const Product&) { os << "product"; },
                 [&](const LeftOnly& g) { os << "left_only(" << g.f.name() << ")"; },
                 [&](const Custom& g) { os << g.label; },
             },
             kind_);
  return os.str();
}

RealMatrix bivariate_grid(const BivariateFunction& g, const SpectralPair& spectra) {
  const auto& lam = spectra.left.lambda;
  const auto& mu = spectra.right.lambda;
  RealMatrix grid(lam.size(), mu.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    for (Eigen::Index j = 0; j < mu.size(); ++j) {
      const double v = g(lam(i), mu(j));
      if (!std::isfinite(v)) {
        std::ostringstream os;
        os << g.name() << " is undefined at (" << lam(i) << ", " << mu(j) << ")";
        throw DomainError(os.str());
      }
      grid(i, j) = v;
    }
  }
  return grid;
}

ComplexMatrix bivariate_apply(const BivariateFunction& g, const PositiveMatrix& a,
                              const PositiveMatrix& b, const ComplexMatrix& k) {
  check_shapes(a, b, k);
  const RealMatrix grid = bivariate_grid(g, {a.eig(), b.eig()});
  const ComplexMatrix rotated = a.eig().u.adjoint() * k * b.eig().u;
  const ComplexMatrix weighted = rotated.cwiseProduct(grid.cast<Complex>());
  return a.eig().u * weighted * b.eig().u.adjoint();
}

double trace_form(const BivariateFunction& g, const PositiveMatrix& a, const PositiveMatrix& b,
                  const ComplexMatrix& k) {
  check_shapes(a, b, k);
  const RealMatrix grid = bivariate_grid(g, {a.eig(), b.eig()});
  const ComplexMatrix rotated = a.eig().u.adjoint() * k * b.eig().u;
  return (rotated.cwiseAbs2().cwiseProduct(grid)).sum();
}

}  // namespace tracelab
