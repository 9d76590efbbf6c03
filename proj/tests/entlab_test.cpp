#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"
#include "tracelab/entlab.hpp"
#include "tracelab/errors.hpp"

namespace {

using namespace tracelab;
using tracelab::testing::diag;
using tracelab::testing::pd_diag;

double oracle_entropy(const ComplexMatrix& a) {
  return -tracelab::testing::oracle_fn(a, [](double x) { return x * std::log(x); }).trace().real();
}

TEST(Entropy, Examples) {
  EXPECT_NEAR(entropy(pd_diag({0.5, 0.5})), std::log(2.0), 1e-15);
  EXPECT_NEAR(entropy(PositiveMatrix::scalar(1.0)), 0.0, 1e-16);
  EXPECT_NEAR(entropy(PositiveMatrix::scalar(2.0)), -2 * std::log(2.0), 1e-15);
  EXPECT_THROW(entropy(PositiveMatrix(diag({1, 0}))), DomainError);
}

TEST(ContractedEntropyFunctional, Examples) {
  Rng r(1);
  const PositiveMatrix a = random_pd(4, r, 100.0);
  EXPECT_NEAR(theorem1_functional(a, ComplexMatrix::Identity(4, 4)), 0.0, 1e-12);
  const double alpha = 2.5;
  const Complex kappa(0.3, 0.4);
  const double k2 = std::norm(kappa);
  ComplexMatrix k(1, 1);
  k(0, 0) = kappa;
  EXPECT_NEAR(theorem1_functional(PositiveMatrix::scalar(alpha), k), -k2 * alpha * std::log(k2), 1e-14);
}

TEST(ContractedEntropyFunctional, MatchesIndependentOracle) {
  Rng r(2);
  for (int i = 0; i < 20; ++i) {
    const PositiveMatrix a = random_pd(4, r, 100.0);
    const ComplexMatrix k = random_gaussian(4, 3, r);
    const ComplexMatrix kak = k.adjoint() * a.matrix() * k;
    const ComplexMatrix alog = tracelab::testing::oracle_fn(a.matrix(), [](double x) { return x * std::log(x); });
    const double expected = oracle_entropy(kak) + (k.adjoint() * alog * k).trace().real();
    EXPECT_NEAR(theorem1_functional(a, k), expected, 1e-10 * (1 + std::abs(expected)));
  }
}

TEST(ContractedEntropyFunctional, RankDeficientKRejected) {
  ComplexMatrix k = ComplexMatrix::Zero(2, 2);
  k(0, 0) = 1.0;
  try {
    theorem1_functional(PositiveMatrix::identity(2), k);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("eigenvalue"), std::string::npos);
  }
}

TEST(ResidualEntropy, ExamplesAndIdentities) {
  Rng r(3);
  EXPECT_NEAR(residual_entropy(BlockFamily({random_pd(3, r, 10.0)})), 0.0, 1e-14);
  EXPECT_NEAR(residual_entropy(BlockFamily({PositiveMatrix::scalar(0.5), PositiveMatrix::scalar(0.5)})),
              -std::log(2.0), 1e-15);
  for (int i = 0; i < 100; ++i) {
    std::vector<PositiveMatrix> blocks;
    const auto n = static_cast<Eigen::Index>(2 + i % 4);
    for (int j = 0; j < 2 + i % 3; ++j) blocks.push_back(random_pd(n, r, 100.0));
    const BlockFamily fam(blocks);
    const double v = residual_entropy(fam);
    EXPECT_LE(v, 1e-10);
    EXPECT_NEAR(v, residual_entropy_via_relative(fam), 1e-10 * (1 + std::abs(v)));
    EXPECT_NEAR(v, residual_entropy_via_blocks(fam), 1e-9 * (1 + std::abs(v)));
  }
}

TEST(RelativeEntropy, Examples) {
  Rng r(4);
  const PositiveMatrix x = random_pd(3, r, 10.0);
  EXPECT_NEAR(relative_entropy(x, x), 0.0, 1e-13);
  EXPECT_NEAR(relative_entropy(PositiveMatrix::scalar(0.5), PositiveMatrix::scalar(1.0)), -0.5 * std::log(2.0), 1e-15);
  EXPECT_THROW(relative_entropy(x, PositiveMatrix::identity(2)), ArgumentError);
}

TEST(KrausChannel, Validation) {
  Rng r(5);
  EXPECT_THROW(KrausChannel({ComplexMatrix::Identity(2, 2) * 0.5}), ArgumentError);
  EXPECT_THROW(KrausChannel(std::vector<ComplexMatrix>{}), ArgumentError);
  EXPECT_THROW(KrausChannel({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)}), ArgumentError);
  EXPECT_THROW(random_channel(5, 2, 2, r), ArgumentError);
}

TEST(RandomChannel, Constraint) {
  Rng r(6);
  const KrausChannel one = random_channel(1, 1, 1, r);
  EXPECT_NEAR(std::abs(one.kraus()[0](0, 0)), 1.0, 1e-14);
  const KrausChannel ch = random_channel(3, 2, 4, r);
  EXPECT_EQ(ch.kraus().size(), 4u);
  EXPECT_EQ(ch.input_dim(), 3);
  EXPECT_EQ(ch.output_dim(), 2);
  EXPECT_LE(ch.normalization_residual(), 1e-10);
  ComplexMatrix sum = ComplexMatrix::Zero(3, 3);
  for (const auto& a : ch.kraus()) sum += a * a.adjoint();
  EXPECT_LT(tracelab::testing::max_diff(sum, ComplexMatrix::Identity(3, 3)), 1e-12);
  Rng s1(9), s2(9);
  EXPECT_EQ(random_channel(3, 3, 2, s1).stacked(), random_channel(3, 3, 2, s2).stacked());
}

TEST(ApplyChannel, TracePreservingAndUnitary) {
  Rng r(7);
  for (int i = 0; i < 30; ++i) {
    const KrausChannel ch = random_channel(3, 3, 3, r);
    const PositiveMatrix a = random_pd(3, r, 100.0);
    EXPECT_NEAR(apply_channel(ch, a).hermitian().trace(), a.hermitian().trace(), 1e-10);
  }
  const ComplexMatrix u = random_unitary(4, r);
  const KrausChannel uc = KrausChannel::unitary(u);
  const PositiveMatrix a = random_pd(4, r, 100.0);
  const auto out = apply_channel(uc, a);
  EXPECT_LT(tracelab::testing::max_diff(out.matrix(), u.adjoint() * a.matrix() * u), 1e-12);
  EXPECT_NEAR(entropy_gain(uc, a), 0.0, 1e-10);
  const KrausChannel trivial({ComplexMatrix::Ones(1, 1)});
  EXPECT_NEAR(entropy_gain(trivial, PositiveMatrix::scalar(0.7)), 0.0, 1e-16);
}

TEST(ApplyChannel, SingularOutputRaises) {
  // Projecting onto a single coordinate leaves the output rank one.
  ComplexMatrix a1 = ComplexMatrix::Zero(1, 2);
  a1(0, 0) = 1.0;
  const KrausChannel ch({a1});
  EXPECT_THROW(apply_channel(ch, PositiveMatrix::scalar(1.0)), DomainError);
}

TEST(EntropyGain, BlockRouteAgrees) {
  Rng r(8);
  for (int i = 0; i < 50; ++i) {
    const KrausChannel ch = random_channel(3, 2, 3, r);
    const PositiveMatrix a = random_pd(3, r, 100.0);
    const double g = entropy_gain(ch, a);
    EXPECT_NEAR(g, entropy_gain_via_blocks(ch, a), 1e-9 * (1 + std::abs(g)));
    const ComplexMatrix phi = apply_channel(ch, a).matrix();
    EXPECT_NEAR(g, oracle_entropy(phi) - oracle_entropy(a.matrix()), 1e-10 * (1 + std::abs(g)));
  }
}

TEST(MultiChannelGain, Reductions) {
  Rng r(9);
  const KrausChannel ch = random_channel(3, 3, 2, r);
  const PositiveMatrix a = random_pd(3, r, 100.0);
  const std::vector<KrausChannel> one{ch};
  const std::vector<PositiveMatrix> blocks{a};
  EXPECT_NEAR(multi_channel_gain(one, blocks), entropy_gain(ch, a), 1e-12);

  const ComplexMatrix u1 = random_unitary(3, r);
  const ComplexMatrix u2 = random_unitary(3, r);
  const PositiveMatrix b = random_pd(3, r, 100.0);
  const std::vector<KrausChannel> unitaries{KrausChannel::unitary(u1), KrausChannel::unitary(u2)};
  const std::vector<PositiveMatrix> pair{a, b};
  const BlockFamily rotated({PositiveMatrix(u1.adjoint() * a.matrix() * u1), PositiveMatrix(u2.adjoint() * b.matrix() * u2)});
  EXPECT_NEAR(multi_channel_gain(unitaries, pair), residual_entropy(rotated), 1e-10);

  const std::vector<KrausChannel> mismatched{random_channel(2, 2, 2, r), random_channel(2, 3, 2, r)};
  const std::vector<PositiveMatrix> small{PositiveMatrix::identity(2), PositiveMatrix::identity(2)};
  EXPECT_THROW(multi_channel_gain(mismatched, small), ArgumentError);
}

}  // namespace
