#ifndef EDD_RNG_HPP
#define EDD_RNG_HPP

#include <cmath>
#include <cstdint>

namespace edd {

// Reproducibility contract: every random draw in this library comes from the
// generators below, never from std:: distributions (whose sequences are
// implementation-defined). Given the same 64-bit seed, the byte-exact same
// stream is produced on any conforming platform.

/// SplitMix64 (Steele, Lea & Flood; Vigna's public-domain reference
/// constants). Used to expand seeds into generator state and to derive
/// independent substreams.
struct SplitMix64 {
  std::uint64_t state;

  constexpr explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

/// Seed for substream `stream` of a master seed: the master seed is mixed
/// once, offset by the golden-ratio increment times (stream + 1), and mixed
/// again. Substreams with distinct indices are decorrelated, so one stream's
/// consumption never perturbs another (per-cluster generation relies on this).
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 outer(seed);
  std::uint64_t base = outer.next();
  SplitMix64 inner(base + 0x9E3779B97F4A7C15ULL * (stream + 1));
  return inner.next();
}

/// xoshiro256++ (Blackman & Vigna), state seeded through SplitMix64.
class Xoshiro256pp {
public:
  constexpr explicit Xoshiro256pp(std::uint64_t seed) : s_{} {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
  }

  constexpr std::uint64_t next() {
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

  /// Uniform double in (0, 1]: top 53 bits, shifted off zero so log() is safe.
  double next_unit() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) without modulo bias (rejection sampling).
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;  // 2^64 mod bound
    std::uint64_t r;
    do {
      r = next();
    } while (r < threshold);
    return r % bound;
  }

private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

/// Standard normal deviates via the Box-Muller transform on xoshiro
/// uniforms. Each pair of draws consumes exactly two uniforms; the second
/// deviate of a pair is cached and returned next.
class GaussianSampler {
public:
  explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = rng_.next_unit();
    double u2 = rng_.next_unit();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

private:
  Xoshiro256pp rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace edd

#endif  // EDD_RNG_HPP
