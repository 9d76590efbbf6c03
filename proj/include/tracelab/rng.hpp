#pragma once

#include <complex>
#include <cstdint>

namespace tracelab {

/// Counter-based generator. The i-th draw of a stream is
///   splitmix64_mix(key + (i + 1) * 0x9E3779B97F4A7C15)
/// with key = splitmix64_mix(seed ^ splitmix64_mix(stream)). Everything is
/// integer arithmetic, so identical (seed, stream) pairs give identical
/// sequences on every platform. Normals use Box-Muller.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }
  std::uint64_t counter() const noexcept { return counter_; }

  /// Independent child generator for sub-task `index`; does not advance *this.
  Rng split(std::uint64_t index) const;

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on the open interval (0, 1).
  double uniform_open();
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
  double normal();
  /// Standard complex normal: real and imaginary parts N(0, 1/2).
  std::complex<double> complex_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;

}  // namespace tracelab
