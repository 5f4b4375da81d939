#pragma once

#include <cstdint>
#include <random>

namespace effvec {

/// One step of SplitMix64 on `state`.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed for substream `stream` of a run seeded with `seed`. Substreams are
/// independent of the order in which they are consumed.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Deterministic stream: std::mt19937_64 output is fixed by the standard,
/// and the conversions to doubles below are done by hand for the same reason.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(substream_seed(seed, stream)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on the open interval (0, 1).
  double unit_open();
  /// Uniform on the open interval (lo, hi).
  double uniform_open(double lo, double hi);
  /// exp of a uniform draw on (log lo, log hi); lo > 0.
  double log_uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace effvec
