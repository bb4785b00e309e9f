#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace phs {

// Reproducible random stream: xoshiro256++ seeded through splitmix64.
// The integer stream is bit-exact across platforms; substreams for parallel
// replications are derived by hashing (seed, stream index) so each worker
// owns an independent generator.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed) { reseed(seed, 0); }
  RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed) {
    reseed(seed, stream);
  }

  // Independent substream k of the same base seed.
  RngStream substream(std::uint64_t k) const { return RngStream(seed_, k + 1); }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform on [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform on (0, 1], safe for log()
  double uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double normal() {
    // Box-Muller; the sine draw is discarded to keep the stream stateless.
    const double u1 = uniform_pos();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  double exponential() { return -std::log(uniform_pos()); }

  // Gamma(shape a, rate 1), Marsaglia-Tsang with the a < 1 boost.
  double gamma(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("gamma: shape must be > 0");
    if (a < 1.0) {
      const double u = uniform_pos();
      return gamma(a + 1.0) * std::pow(u, 1.0 / a);
    }
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_pos();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  void reseed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * stream);
    for (auto& s : s_) s = splitmix64(x);
  }

  std::uint64_t seed_;
  std::uint64_t s_[4];
};

// Deterministic seed derivation for replication k of a base seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace phs
