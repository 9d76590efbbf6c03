#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "tracelab/errors.hpp"
#include "tracelab/harness.hpp"

namespace {

using namespace tracelab;
using Args = std::span<const ComplexMatrix>;

FunctionalUnderTest trace_power(double p) {
  FunctionalUnderTest fut;
  fut.name = "trace-power";
  fut.sampler = standard_sampler({ArgKind::PositiveDefinite}, 2, 5);
  fut.evaluator = [p](Args a, const Draw&) {
    return apply_fn(ScalarFunction::power(p), PositiveMatrix(HermitianMatrix(a[0]))).trace();
  };
  return fut;
}

TEST(JensenTest, DetectsWrongCurvature) {
  const Rng rng(1);
  EXPECT_TRUE(jensen_test(trace_power(2.0), Claim::Convex, 200, rng, 1e-9).passed);
  EXPECT_TRUE(jensen_test(trace_power(0.5), Claim::Concave, 200, rng, 1e-9).passed);
  const auto bad = jensen_test(trace_power(0.5), Claim::Convex, 200, rng, 1e-9);
  EXPECT_FALSE(bad.passed);
  EXPECT_GT(bad.max_violation, 1e-6);
  EXPECT_THROW(jensen_test(trace_power(2.0), Claim::PSD, 10, rng, 1e-9), ArgumentError);
}

TEST(JensenTest, WitnessReproducesViolation) {
  const Rng rng(2);
  const auto fut = trace_power(0.5);
  const auto rep = jensen_test(fut, Claim::Convex, 100, rng, 1e-9);
  ASSERT_FALSE(rep.passed);
  const Draw draw = draw_from_json(rep.witness);
  const double lam = rep.witness["lambda"].get<double>();
  const double fu = fut.evaluator(draw.first, draw);
  const double fv = fut.evaluator(draw.second, draw);
  const ComplexMatrix mix = lam * draw.first[0] + (1 - lam) * draw.second[0];
  const double fm = fut.evaluator(Args(&mix, 1), draw);
  const double gap = (fm - lam * fu - (1 - lam) * fv) / (1 + std::max({std::abs(fu), std::abs(fv), std::abs(fm)}));
  EXPECT_NEAR(gap, rep.max_violation, 1e-12);
}

TEST(JensenTest, ThreadCountDoesNotChangeReport) {
  const Rng rng(3);
  HarnessOptions one, four;
  four.threads = 4;
  const auto a = jensen_test(trace_power(0.5), Claim::Convex, 97, rng, 1e-9, one);
  const auto b = jensen_test(trace_power(0.5), Claim::Convex, 97, rng, 1e-9, four);
  EXPECT_EQ(report_to_json(a, false).dump(), report_to_json(b, false).dump());
}

TEST(JensenTest, VariableArityNeedsMatchingTuples) {
  FunctionalUnderTest fut;
  fut.name = "bad";
  fut.arity = 0;
  fut.sampler = [](Rng& r) {
    Draw d;
    d.first = {random_pd(2, r, 10.0).matrix()};
    return d;
  };
  fut.evaluator = [](Args, const Draw&) { return 0.0; };
  const auto rep = jensen_test(fut, Claim::Convex, 3, Rng(1), 1e-9);
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ(rep.errors, 3u);
}

TEST(OrderMonotoneTest, Directions) {
  const Rng rng(4);
  const auto fut = trace_power(0.5);
  EXPECT_TRUE(order_monotone_test(fut, Direction::Increasing, 100, rng, 1e-9).passed);
  const auto bad = order_monotone_test(fut, Direction::Decreasing, 100, rng, 1e-9);
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.witness["second"].size(), 1u);
}

TEST(PsdClaimTest, PassesAndFails) {
  const Rng rng(5);
  MatrixClaimUnderTest gram;
  gram.name = "gram";
  gram.sampler = [](Rng& r) {
    Draw d;
    d.dim = 3;
    d.first = {random_gaussian(3, 3, r)};
    return d;
  };
  gram.evaluator = [](const Draw& d) { return HermitianMatrix(d.first[0].adjoint() * d.first[0]); };
  EXPECT_TRUE(psd_claim_test(gram, 100, rng, 1e-12).passed);
  MatrixClaimUnderTest herm = gram;
  herm.evaluator = [](const Draw& d) { return HermitianMatrix(d.first[0] + d.first[0].adjoint()); };
  EXPECT_FALSE(psd_claim_test(herm, 100, rng, 1e-12).passed);
}

TEST(RunTrials, ErrorsBecomeInfiniteViolations) {
  const auto rep = run_trials("err", Claim::Identity, 10, Rng(6), 1e-9, [](Rng&, std::size_t i) {
    if (i == 4 || i == 7) throw std::runtime_error("boom " + std::to_string(i));
    return TrialOutcome{0.0, {}, 1};
  });
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ(rep.errors, 2u);
  EXPECT_EQ(rep.first_error, "boom 4");
  EXPECT_TRUE(std::isinf(rep.max_violation));
  const auto j = report_to_json(rep);
  EXPECT_EQ(j["max_violation"], "inf");
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["witness"]["trial"], 4);
  EXPECT_THROW(run_trials("x", Claim::Identity, 0, Rng(1), 1e-9, [](Rng&, std::size_t) { return TrialOutcome{}; }),
               ArgumentError);
}

TEST(RunTrials, TiesKeepLowestIndex) {
  for (unsigned threads : {1u, 3u}) {
    const auto rep = run_trials("tie", Claim::Identity, 9, Rng(7), 1.0,
                                [](Rng&, std::size_t i) { return TrialOutcome{i % 3 == 2 ? 0.5 : 0.1, {}, 1}; }, threads);
    EXPECT_EQ(rep.witness["trial"], 2);
    EXPECT_EQ(rep.max_violation, 0.5);
  }
}

TEST(MergeReports, KeepsWorstCase) {
  PropertyReport a, b;
  a.trials = 10;
  a.max_violation = 1e-12;
  a.witness = {{"x", 1}};
  b.trials = 5;
  b.max_violation = 1e-3;
  b.witness = {{"x", 2}};
  const auto m = merge_reports("s", Claim::Convex, 1e-9, {{"p=1", a}, {"p=2", b}});
  EXPECT_EQ(m.trials, 15u);
  EXPECT_EQ(m.witness["case"], "p=2");
  EXPECT_EQ(m.witness["x"], 2);
  EXPECT_FALSE(m.passed);
}

TEST(ReportJson, SchemaFields) {
  PropertyReport r;
  r.suite = "demo";
  r.claim = Claim::JointlyConcave;
  r.trials = 3;
  r.dim = 4;
  r.seed = 42;
  r.tolerance = 1e-9;
  r.max_violation = 1e-15;
  r.witness = {{"x", 1}};
  r.runtime_ms = 2.5;
  r.finalize();
  const auto j = report_to_json(r);
  for (const char* key : {"suite", "claim", "trials", "dim", "seed", "tol", "max_violation", "verdict", "runtime_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_FALSE(j.contains("witness"));
  EXPECT_EQ(j["claim"], "JointlyConcave");
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_FALSE(report_to_json(r, false).contains("runtime_ms"));
}

TEST(MatrixJson, RoundTrip) {
  Rng r(8);
  const ComplexMatrix m = random_gaussian(3, 2, r);
  EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
  auto bad = matrix_to_json(m);
  bad["rows"] = 4;
  EXPECT_THROW(matrix_from_json(bad), ArgumentError);
}

TEST(StandardSampler, Kinds) {
  const auto sampler = standard_sampler({ArgKind::PositiveDefinite, ArgKind::Hermitian, ArgKind::Contraction,
                                         ArgKind::UnitInterval},
                                        2, 4);
  Rng r(9);
  for (int i = 0; i < 20; ++i) {
    const Draw d = sampler(r);
    ASSERT_EQ(d.first.size(), 4u);
    EXPECT_GE(d.dim, 2u);
    EXPECT_LE(d.dim, 4u);
    EXPECT_GT(min_eigenvalue(HermitianMatrix(d.first[0])), 0.0);
    EXPECT_LE(spectral_norm(d.first[2]), 1.0);
    const auto e = eigh(HermitianMatrix(d.first[3]));
    EXPECT_GT(e.lambda(0), 0.0);
    EXPECT_LT(e.lambda(e.dim() - 1), 1.0);
  }
  EXPECT_THROW(standard_sampler({ArgKind::Hermitian}, 3, 2), ArgumentError);
}

}  // namespace
