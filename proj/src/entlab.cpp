#include "tracelab/entlab.hpp"

#include <cmath>
#include <sstream>

#include "tracelab/errors.hpp"

namespace tracelab {

namespace {

double trace_xlogx(const EigenDecomposition& eig) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eig.dim(); ++i) sum += eig.lambda(i) * std::log(eig.lambda(i));
  return sum;
}

PositiveMatrix require_positive(const HermitianMatrix& m, std::string_view what) {
  const double low = min_eigenvalue(m);
  if (!(low > kPositivityFloor)) {
    std::ostringstream os;
    os << what << " is not strictly positive: smallest eigenvalue " << low;
    throw DomainError(os.str());
  }
  return PositiveMatrix(m);
}

ComplexMatrix block_diagonal(std::span<const ComplexMatrix> blocks) {
  Eigen::Index total = 0;
  for (const auto& b : blocks) total += b.rows();
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    out.block(offset, offset, b.rows(), b.cols()) = b;
    offset += b.rows();
  }
  return out;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ArgumentError("KrausChannel needs at least one Kraus matrix");
  for (const auto& a : kraus_) {
    if (a.rows() != input_dim() || a.cols() != output_dim()) {
      throw ArgumentError("KrausChannel: Kraus matrices must share one shape");
    }
    require_finite(a, "Kraus matrix");
  }
  const double residual = normalization_residual();
  if (residual > 1e-10) {
    std::ostringstream os;
    os << "KrausChannel: max |sum a_i a_i* - I| = " << residual << " exceeds 1e-10";
    throw ArgumentError(os.str());
  }
}

KrausChannel KrausChannel::unitary(const ComplexMatrix& u) { return KrausChannel({u}); }

double KrausChannel::normalization_residual() const {
  ComplexMatrix sum = ComplexMatrix::Zero(input_dim(), input_dim());
  for (const auto& a : kraus_) sum += a * a.adjoint();
  return max_abs(sum - ComplexMatrix::Identity(input_dim(), input_dim()));
}

HermitianMatrix KrausChannel::apply(const HermitianMatrix& a) const {
  if (a.dim() != input_dim()) {
    throw ArgumentError("KrausChannel::apply: input is " + std::to_string(a.dim()) +
                        "-dimensional, channel expects " + std::to_string(input_dim()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(output_dim(), output_dim());
  for (const auto& k : kraus_) out += k.adjoint() * a.matrix() * k;
  return HermitianMatrix(out);
}

ComplexMatrix KrausChannel::stacked() const {
  ComplexMatrix column(input_dim() * static_cast<Eigen::Index>(kraus_.size()), output_dim());
  for (std::size_t i = 0; i < kraus_.size(); ++i) {
    column.block(static_cast<Eigen::Index>(i) * input_dim(), 0, input_dim(), output_dim()) = kraus_[i];
  }
  return column;
}

BlockFamily::BlockFamily(std::vector<PositiveMatrix> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw ArgumentError("BlockFamily must be nonempty");
  for (const auto& b : blocks_) {
    if (b.dim() != dim()) throw ArgumentError("BlockFamily: blocks must share one dimension");
  }
}

HermitianMatrix BlockFamily::sum() const {
  ComplexMatrix total = ComplexMatrix::Zero(dim(), dim());
  for (const auto& b : blocks_) total += b.matrix();
  return HermitianMatrix(total);
}

double entropy(const PositiveMatrix& a) { return -trace_xlogx(a.eig()); }

double theorem1_functional(const PositiveMatrix& a, const ComplexMatrix& k) {
  if (k.rows() != a.dim()) {
    throw ArgumentError("theorem1_functional: K must have as many rows as A");
  }
  require_finite(k, "theorem1_functional K");
  const HermitianMatrix compressed(ComplexMatrix(k.adjoint() * a.matrix() * k));
  const PositiveMatrix kak = require_positive(compressed, "K*AK");
  const HermitianMatrix alog = apply_fn(ScalarFunction::xlogx(), a);
  const double second = (k.adjoint() * alog.matrix() * k).trace().real();
  return -trace_xlogx(kak.eig()) + second;
}

double residual_entropy(const BlockFamily& family) {
  const PositiveMatrix total(family.sum());
  double value = entropy(total);
  for (const auto& b : family.blocks()) value -= entropy(b);
  return value;
}

double relative_entropy(const PositiveMatrix& x, const PositiveMatrix& y) {
  if (x.dim() != y.dim()) throw ArgumentError("relative_entropy: dimension mismatch");
  const HermitianMatrix log_y = apply_fn(ScalarFunction::log(), y);
  return trace_xlogx(x.eig()) - (x.matrix() * log_y.matrix()).trace().real();
}

double residual_entropy_via_relative(const BlockFamily& family) {
  const PositiveMatrix total(family.sum());
  double value = 0.0;
  for (const auto& b : family.blocks()) value += relative_entropy(b, total);
  return value;
}

double residual_entropy_via_blocks(const BlockFamily& family) {
  std::vector<ComplexMatrix> blocks;
  for (const auto& b : family.blocks()) blocks.push_back(b.matrix());
  const Eigen::Index n = family.dim();
  const auto k = static_cast<Eigen::Index>(family.size());
  ComplexMatrix column(n * k, n);
  for (Eigen::Index i = 0; i < k; ++i) column.block(i * n, 0, n, n) = ComplexMatrix::Identity(n, n);
  return theorem1_functional(PositiveMatrix(block_diagonal(blocks)), column);
}

PositiveMatrix apply_channel(const KrausChannel& channel, const PositiveMatrix& a) {
  return require_positive(channel.apply(a.hermitian()), "channel output Phi(A)");
}

double entropy_gain(const KrausChannel& channel, const PositiveMatrix& a) {
  return entropy(apply_channel(channel, a)) - entropy(a);
}

double entropy_gain_via_blocks(const KrausChannel& channel, const PositiveMatrix& a) {
  const std::vector<ComplexMatrix> copies(channel.kraus().size(), a.matrix());
  return theorem1_functional(PositiveMatrix(block_diagonal(copies)), channel.stacked());
}

double multi_channel_gain(std::span<const KrausChannel> channels,
                          std::span<const PositiveMatrix> blocks) {
  if (channels.empty() || channels.size() != blocks.size()) {
    throw ArgumentError("multi_channel_gain: need one block per channel");
  }
  const Eigen::Index m = channels.front().output_dim();
  ComplexMatrix total = ComplexMatrix::Zero(m, m);
  double value = 0.0;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (channels[i].output_dim() != m) {
      throw ArgumentError("multi_channel_gain: channels must share one output dimension");
    }
    total += channels[i].apply(blocks[i].hermitian()).matrix();
    value -= entropy(blocks[i]);
  }
  return value + entropy(require_positive(HermitianMatrix(total), "sum of channel outputs"));
}

KrausChannel random_channel(Eigen::Index n, Eigen::Index m, Eigen::Index k, Rng& rng) {
  if (n < 1 || m < 1 || k < 1) throw ArgumentError("random_channel: dimensions must be >= 1");
  if (k * m < n) {
    throw ArgumentError("random_channel: k*m = " + std::to_string(k * m) + " < n = " +
                        std::to_string(n) + ", no isometric dilation");
  }
  const ComplexMatrix u = random_unitary(k * m, rng);
  const ComplexMatrix isometry = u.leftCols(n);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) kraus.emplace_back(isometry.middleRows(i * m, m).adjoint());
  return KrausChannel(std::move(kraus));
}

}  // namespace tracelab
