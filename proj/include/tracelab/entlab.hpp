#pragma once

#include <span>
#include <vector>

#include "tracelab/matcore.hpp"

namespace tracelab {

/// Completely positive trace-preserving map Phi(A) = sum_i a_i* A a_i from
/// n x n to m x m matrices. Kraus matrices a_i are n x m and normalized as
/// sum_i a_i a_i* = I_n; this is the transpose of the more common
/// sum_i a_i* a_i = I convention and is what makes Phi trace preserving here.
class KrausChannel {
 public:
  /// Throws ArgumentError on inconsistent shapes or a normalization residual above 1e-10.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus);
  /// Phi(A) = U* A U.
  static KrausChannel unitary(const ComplexMatrix& u);

  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  Eigen::Index input_dim() const noexcept { return kraus_.front().rows(); }
  Eigen::Index output_dim() const noexcept { return kraus_.front().cols(); }
  /// max |sum_i a_i a_i* - I|
  double normalization_residual() const;
  /// Phi(A) without the positivity requirement on the output.
  HermitianMatrix apply(const HermitianMatrix& a) const;
  /// The nk x m column of stacked Kraus matrices.
  ComplexMatrix stacked() const;

 private:
  std::vector<ComplexMatrix> kraus_;
};

/// Blocks A_1, ..., A_k of a compound system, all strictly positive and n x n.
class BlockFamily {
 public:
  explicit BlockFamily(std::vector<PositiveMatrix> blocks);

  const std::vector<PositiveMatrix>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  Eigen::Index dim() const noexcept { return blocks_.front().dim(); }
  HermitianMatrix sum() const;

 private:
  std::vector<PositiveMatrix> blocks_;
};

/// S(A) = -Tr A log A (natural log).
double entropy(const PositiveMatrix& a);

/// -Tr K*AK log(K*AK) + Tr K*(A log A)K; throws DomainError naming the
/// smallest eigenvalue when K*AK is not strictly positive.
double theorem1_functional(const PositiveMatrix& a, const ComplexMatrix& k);

/// S(sum A_i) - sum S(A_i); never positive.
double residual_entropy(const BlockFamily& family);

/// D(X||Y) = Tr X (log X - log Y).
double relative_entropy(const PositiveMatrix& x, const PositiveMatrix& y);

/// sum_i D(A_i || sum_j A_j); equals residual_entropy algebraically.
double residual_entropy_via_relative(const BlockFamily& family);

/// Block-diagonal diag(A_1..A_k) with K the column of identities, fed to theorem1_functional.
double residual_entropy_via_blocks(const BlockFamily& family);

/// Phi(A); throws DomainError when the output is not strictly positive.
PositiveMatrix apply_channel(const KrausChannel& channel, const PositiveMatrix& a);

/// S(Phi(A)) - S(A).
double entropy_gain(const KrausChannel& channel, const PositiveMatrix& a);

/// theorem1_functional on diag(A, .., A) with K the column of Kraus matrices.
double entropy_gain_via_blocks(const KrausChannel& channel, const PositiveMatrix& a);

/// S(sum_i Phi_i(A_i)) - sum_i S(A_i). Channel i must accept blocks[i].
double multi_channel_gain(std::span<const KrausChannel> channels,
                          std::span<const PositiveMatrix> blocks);

/// Kraus family built from the first n columns of a Haar unitary of size k*m,
/// cut into k blocks of m rows. Requires k*m >= n.
KrausChannel random_channel(Eigen::Index n, Eigen::Index m, Eigen::Index k, Rng& rng);

}  // namespace tracelab
