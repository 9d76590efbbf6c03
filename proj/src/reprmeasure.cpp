#include "tracelab/reprmeasure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "tracelab/errors.hpp"
#include "tracelab/quadrature.hpp"
#include "tracelab/superop.hpp"

namespace tracelab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGrading = 3.0;

void require_exponent(double p) {
  if (!(p > 0.0 && p < 2.0)) {
    throw ArgumentError("exponent p must lie in (0, 2), got " + std::to_string(p));
  }
}

// int_0^inf integrand(lam) dlam with lam = c v^(1/p) on (0, c] and
// lam = c w^(-1/p) on [c, inf), both mapped to (0, 1] and integrated on
// algebraically graded panels; panels double until the estimate settles.
double semi_infinite(const std::function<double(double)>& integrand, double p,
                     const QuadratureSpec& q, const char* what) {
  q.validate();
  const double c = q.split_point;
  const double inv_p = 1.0 / p;
  auto lower = [&](double v) {
    const double lam = c * std::pow(v, inv_p);
    return integrand(lam) * c * inv_p * std::pow(v, inv_p - 1.0);
  };
  auto upper = [&](double w) {
    const double lam = c * std::pow(w, -inv_p);
    return integrand(lam) * c * inv_p * std::pow(w, -inv_p - 1.0);
  };
  const GaussRule rule = gauss_legendre(q.nodes_per_panel);
  auto estimate = [&](int panels) {
    return composite_gauss(lower, 0.0, 1.0, panels, rule, kGrading) +
           composite_gauss(upper, 0.0, 1.0, panels, rule, kGrading);
  };
  int panels = q.panels;
  double previous = estimate(panels);
  double change = std::numeric_limits<double>::infinity();
  for (int level = 0; level < q.max_doublings; ++level) {
    panels *= 2;
    const double current = estimate(panels);
    change = std::abs(current - previous);
    if (std::isfinite(current) && change <= q.target_rel_err * (1.0 + std::abs(current))) {
      return current;
    }
    previous = current;
  }
  std::ostringstream os;
  os << what << ": quadrature did not converge for p=" << p << " after " << panels
     << " panels; last change " << change << ", last estimate " << previous;
  throw QuadratureError(os.str(), change);
}

// sin A_p(lam, pi). For lam^p > 1 the lifted argument is p pi + theta with
// theta = arg(lam^p + e^(-i p pi)) small, so sin A_p = -sin(theta / p)
// avoids evaluating sin near a multiple of pi.
double sin_angle_at_pi(double lam, double p) {
  const double lp = std::pow(lam, p);
  if (lp <= 1.0) return std::sin(angle_Ap(lam, kPi, p));
  const double theta = std::atan2(-std::sin(p * kPi), lp + std::cos(p * kPi));
  return -std::sin(theta / p);
}

// lam/(1+lam^2) - 1/(t+lam) without cancellation.
double kernel(double lam, double t) {
  return (t - 1.0 / lam) / ((lam + 1.0 / lam) * (t + lam));
}

}  // namespace

void QuadratureSpec::validate() const {
  if (panels < 4) throw ArgumentError("QuadratureSpec: panels must be >= 4");
  if (nodes_per_panel < 8) throw ArgumentError("QuadratureSpec: nodes_per_panel must be >= 8");
  if (!(target_rel_err >= 1e-10)) throw ArgumentError("QuadratureSpec: target_rel_err must be >= 1e-10");
  if (!(split_point > 0.0)) throw ArgumentError("QuadratureSpec: split_point must be positive");
}

double angle_Ap(double r, double theta, double p) {
  require_exponent(p);
  if (!(r > 0.0)) throw ArgumentError("angle_Ap: r must be positive");
  if (!(theta > 0.0 && theta <= kPi)) throw ArgumentError("angle_Ap: theta must lie in (0, pi]");
  const double rp = std::pow(r, p);
  double arg = std::atan2(rp * std::sin(p * theta), rp * std::cos(p * theta) + 1.0);
  if (arg < 0.0) arg += 2.0 * kPi;
  return arg / p;
}

double weight_hp(double lam, double p) {
  require_exponent(p);
  if (!(lam > 0.0)) throw ArgumentError("weight_hp: lambda must be positive");
  if (p == 1.0) return 0.0;
  const double lp = std::pow(lam, p);
  const double modulus = std::hypot(lp * std::cos(p * kPi) + 1.0, lp * std::sin(p * kPi));
  return std::pow(modulus, 1.0 / p) * sin_angle_at_pi(lam, p) / kPi;
}

double beta_const(double p, const QuadratureSpec& q) {
  require_exponent(p);
  if (p == 1.0) return 1.0;
  const double integral = semi_infinite(
      [p](double lam) { return -weight_hp(lam, p) / (lam * lam * (lam + 1.0 / lam)); }, p, q,
      "beta_const");
  return 1.0 - integral;
}

double eval_integral_rep(double t, double p, const QuadratureSpec& q) {
  require_exponent(p);
  if (!(t >= 0.0)) throw ArgumentError("eval_integral_rep: t must be >= 0");
  if (p == 1.0) return t + 1.0;
  const double beta = beta_const(p, q);
  // beta is defined by the t = 0 case.
  if (t == 0.0) return 1.0;
  const double integral = semi_infinite(
      [p, t](double lam) {
        return kernel(lam, t) * weight_hp(lam, p);
      },
      p, q, "eval_integral_rep");
  return beta + t + integral;
}

double proot_closed_form(double t, double p) {
  if (!(t >= 0.0)) throw ArgumentError("proot_closed_form: t must be >= 0");
  return std::pow(std::pow(t, p) + 1.0, 1.0 / p);
}

IdentitySides divided_diff_identity(double t, double s, double p, const QuadratureSpec& q) {
  if (!(p > 0.0 && p <= 1.0)) throw ArgumentError("divided_diff_identity: p must lie in (0, 1]");
  if (!(t > 0.0 && s > 0.0)) throw ArgumentError("divided_diff_identity: t, s must be positive");
  q.validate();
  const double lhs = BivariateFunction::divided_diff(p)(t, s);
  const double tp = std::pow(t, p);
  const double sp = std::pow(s, p);
  const double e = (1.0 - p) / p;
  const double integral = composite_gauss(
      [&](double lam) { return std::pow(lam * tp + (1.0 - lam) * sp, e); }, 0.0, 1.0, q.panels,
      gauss_legendre(q.nodes_per_panel));
  return {lhs, integral / p};
}

PropertyReport op_monotone_check(const ScalarFunction& f, std::size_t n, std::size_t trials,
                                 const Rng& rng, double tol, const HarnessOptions& options) {
  const auto dim = static_cast<Eigen::Index>(n);
  auto trial = [&](Rng& local, std::size_t) {
    const PositiveMatrix a = random_pd(dim, local, options.cond_cap);
    const HermitianMatrix d = random_psd_increment(dim, local);
    const PositiveMatrix b(a.hermitian() + d);
    const HermitianMatrix fa = apply_fn(f, a);
    const HermitianMatrix fb = apply_fn(f, b);
    const double low = min_eigenvalue(fb - fa);
    const double scale = 1.0 + std::max(max_abs(fa.matrix()), max_abs(fb.matrix()));
    TrialOutcome out;
    out.dim = n;
    out.violation = std::max(0.0, -low) / scale;
    Draw draw;
    draw.dim = n;
    draw.first = {a.matrix()};
    draw.second = {d.matrix()};
    out.witness = draw_to_json(draw);
    out.witness["values"] = {{"min_eig_f_b_minus_f_a", low}};
    return out;
  };
  return run_trials("op_monotone(" + f.name() + ")", Claim::Monotone, trials, rng, tol, trial,
                    options.threads);
}

PropertyReport op_convex_check(const ScalarFunction& f, std::size_t n, std::size_t trials,
                               const Rng& rng, double tol, const HarnessOptions& options) {
  const auto dim = static_cast<Eigen::Index>(n);
  auto trial = [&](Rng& local, std::size_t) {
    const PositiveMatrix a = random_pd(dim, local, options.cond_cap);
    const PositiveMatrix b = random_pd(dim, local, options.cond_cap);
    const HermitianMatrix fa = apply_fn(f, a);
    const HermitianMatrix fb = apply_fn(f, b);
    TrialOutcome out;
    out.dim = n;
    out.violation = -std::numeric_limits<double>::infinity();
    for (const double lam : {0.5, local.uniform_open()}) {
      const PositiveMatrix mix(lam * a.hermitian() + (1.0 - lam) * b.hermitian());
      const HermitianMatrix fm = apply_fn(f, mix);
      const double low = min_eigenvalue(lam * fa + (1.0 - lam) * fb - fm);
      const double scale = 1.0 + std::max({max_abs(fa.matrix()), max_abs(fb.matrix()), max_abs(fm.matrix())});
      const double v = std::max(0.0, -low) / scale;
      if (v > out.violation) {
        out.violation = v;
        Draw draw;
        draw.dim = n;
        draw.first = {a.matrix()};
        draw.second = {b.matrix()};
        out.witness = draw_to_json(draw);
        out.witness["lambda"] = lam;
        out.witness["values"] = {{"min_eig_gap", low}};
      }
    }
    return out;
  };
  return run_trials("op_convex(" + f.name() + ")", Claim::Convex, trials, rng, tol, trial,
                    options.threads);
}

}  // namespace tracelab
