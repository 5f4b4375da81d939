#include "effvec/random.hpp"

#include <cmath>

namespace effvec {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t s = seed;
  const std::uint64_t a = splitmix64(s);
  std::uint64_t t = a ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL);
  return splitmix64(t);
}

double RandomStream::unit_open() {
  // 53 random bits, shifted half a step off zero.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::uniform_open(double lo, double hi) {
  while (true) {
    const double x = lo + (hi - lo) * unit_open();
    if (x > lo && x < hi) return x;
  }
}

double RandomStream::log_uniform(double lo, double hi) {
  const double a = std::log(lo);
  const double b = std::log(hi);
  const double x = std::exp(a + (b - a) * unit_open());
  return x < lo ? lo : (x > hi ? hi : x);
}

}  // namespace effvec
