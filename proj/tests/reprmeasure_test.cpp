#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tracelab/errors.hpp"
#include "tracelab/reprmeasure.hpp"

namespace {

using namespace tracelab;
constexpr double kPi = std::numbers::pi;

std::vector<double> log_grid() {
  std::vector<double> out;
  for (int i = 0; i < 30; ++i) out.push_back(std::pow(10.0, -3.0 + 6.0 * i / 29.0));
  return out;
}

const std::vector<double> kPGrid{0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75};

TEST(AngleAp, Bounds) {
  for (const double p : kPGrid) {
    for (const double lam : log_grid()) {
      const double a = angle_Ap(lam, kPi, p);
      if (p < 1.0) {
        EXPECT_GT(a, 0.0);
        EXPECT_LT(a, kPi);
      } else if (p == 1.0) {
        EXPECT_NEAR(a, lam < 1 ? 0.0 : kPi, 1e-12);
      } else {
        EXPECT_GT(a, kPi);
        EXPECT_LT(a, 2 * kPi);
      }
    }
    for (const double theta : {0.3, 1.0, 2.5}) {
      if (p <= 1.0) {
        const double a = angle_Ap(2.0, theta, p);
        EXPECT_GT(a, 0.0);
        EXPECT_LT(a, theta);
      }
    }
  }
}

TEST(AngleAp, HalfPowerClosedForm) {
  for (const double lam : log_grid()) {
    EXPECT_NEAR(angle_Ap(lam, kPi, 0.5), 2 * std::atan(std::sqrt(lam)), 1e-14);
  }
}

TEST(AngleAp, RejectsBadArguments) {
  EXPECT_THROW(angle_Ap(1.0, kPi, 2.0), ArgumentError);
  EXPECT_THROW(angle_Ap(1.0, kPi, 0.0), ArgumentError);
  EXPECT_THROW(angle_Ap(-1.0, kPi, 0.5), ArgumentError);
}

TEST(WeightHp, SignPattern) {
  for (const double p : kPGrid) {
    for (const double lam : log_grid()) {
      const double h = weight_hp(lam, p);
      if (p < 1.0) EXPECT_GE(h, 0.0) << p << " " << lam;
      if (p > 1.0) EXPECT_LE(h, 0.0) << p << " " << lam;
      if (p == 1.0) EXPECT_LE(std::abs(h), 1e-12);
    }
  }
  EXPECT_LT(weight_hp(1.0, 1.5), 0.0);
}

TEST(WeightHp, HalfPowerClosedForm) {
  for (const double lam : log_grid()) {
    const double expected = 2 * std::sqrt(lam) / kPi;
    EXPECT_NEAR(weight_hp(lam, 0.5), expected, 1e-10 * std::max(1.0, expected));
  }
  EXPECT_NEAR(weight_hp(1.0, 0.5), 2 / kPi, 1e-15);
}

TEST(WeightHp, EndpointAsymptotics) {
  // h_p(lam) ~ lam^p sin(p pi) / (p pi) as lam -> 0 for p < 1.
  for (const double p : {0.25, 0.75}) {
    const double lam = 1e-40;
    EXPECT_NEAR(weight_hp(lam, p) / (std::pow(lam, p) * std::sin(p * kPi) / (p * kPi)), 1.0, 1e-8);
  }
  // For p > 1 the lifted argument leaves h_p(0+) = sin(2 pi / p) / pi.
  EXPECT_NEAR(weight_hp(1e-12, 1.5), std::sin(2 * kPi / 1.5) / kPi, 1e-9);
}

TEST(BetaConst, PEqualsOneAndContinuity) {
  EXPECT_EQ(beta_const(1.0), 1.0);
  double previous = beta_const(0.5);
  for (const double p : {0.55, 0.6, 0.65, 0.7}) {
    const double b = beta_const(p);
    EXPECT_LT(std::abs(b - previous), 0.5);
    previous = b;
  }
}

TEST(EvalIntegralRep, ReconstructsBelowOne) {
  for (const double p : {0.25, 0.5, 0.75, 1.0}) {
    for (const double t : {0.0, 0.1, 1.0, 10.0, 100.0}) {
      const double exact = proot_closed_form(t, p);
      EXPECT_NEAR(eval_integral_rep(t, p), exact, 1e-5 * (1 + exact)) << "p=" << p << " t=" << t;
    }
  }
  EXPECT_NEAR(eval_integral_rep(1.0, 0.5), 4.0, 1e-9);
  EXPECT_EQ(eval_integral_rep(3.0, 1.0), 4.0);
}

TEST(EvalIntegralRep, DivergesAboveOne) {
  // The t = 0 normalization integral has a 1/lam singularity once h_p(0+) != 0.
  try {
    eval_integral_rep(2.0, 1.5);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_GT(e.estimate(), 1e-6);
  }
}

TEST(QuadratureSpec, Validation) {
  QuadratureSpec q;
  q.panels = 2;
  EXPECT_THROW(q.validate(), ArgumentError);
  q = {};
  q.target_rel_err = 1e-12;
  EXPECT_THROW(beta_const(0.5, q), ArgumentError);
}

TEST(DividedDiffIdentity, Grid) {
  for (const double p : {0.25, 0.5, 0.75, 1.0}) {
    for (const double t : {0.1, 1.0, 3.0, 10.0}) {
      for (const double s : {0.1, 1.0, 3.0, 10.0}) {
        const auto sides = divided_diff_identity(t, s, p);
        EXPECT_NEAR(sides.lhs, sides.rhs, 1e-9 * (1 + sides.lhs));
      }
      const auto diag = divided_diff_identity(t, t, p);
      EXPECT_NEAR(diag.lhs, std::pow(t, 1 - p) / p, 1e-12 * diag.lhs);
    }
  }
  const auto ex = divided_diff_identity(4.0, 1.0, 0.5);
  EXPECT_NEAR(ex.lhs, 3.0, 1e-14);
  EXPECT_NEAR(ex.rhs, 3.0, 1e-12);
  const auto one = divided_diff_identity(5.0, 2.0, 1.0);
  EXPECT_NEAR(one.lhs, 1.0, 1e-15);
  EXPECT_NEAR(one.rhs, 1.0, 1e-15);
}

TEST(OpMonotoneCheck, PositiveAndNegativeControls) {
  const Rng rng(3);
  EXPECT_TRUE(op_monotone_check(ScalarFunction::power_plus_one_root(0.5), 3, 200, rng).passed);
  EXPECT_TRUE(op_monotone_check(ScalarFunction::power(0.5), 3, 200, rng).passed);
  EXPECT_TRUE(op_monotone_check(ScalarFunction::weighted_power_root(0.5, 0.3), 3, 200, rng).passed);
  const auto bad = op_monotone_check(ScalarFunction::power(2), 3, 300, rng);
  EXPECT_FALSE(bad.passed);
  EXPECT_TRUE(bad.witness.contains("first"));
  EXPECT_LT(bad.witness["values"]["min_eig_f_b_minus_f_a"].get<double>(), 0.0);
}

TEST(OpConvexCheck, PositiveAndNegativeControls) {
  const Rng rng(4);
  EXPECT_TRUE(op_convex_check(ScalarFunction::power_plus_one_root(1.5), 3, 200, rng).passed);
  EXPECT_TRUE(op_convex_check(ScalarFunction::power(2), 3, 200, rng).passed);
  const auto bad = op_convex_check(ScalarFunction::power(3), 3, 300, rng);
  EXPECT_FALSE(bad.passed);
  EXPECT_TRUE(bad.witness.contains("lambda"));
}

}  // namespace
