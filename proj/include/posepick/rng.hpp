#pragma once

#include <cstdint>
#include <random>

namespace posepick {

// Finalizer from the splitmix64 generator. Used to derive independent,
// well-mixed stream seeds from (master seed, stream index) pairs.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seedable generator with identical output on every platform: the mt19937_64
// engine is fully specified by the standard, and the [0,1) mapping below uses
// the raw 53 high bits instead of std::uniform_real_distribution (whose
// algorithm is implementation-defined).
class StableRng {
 public:
  explicit StableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Unbiased uniform integer in [0, n), n >= 1, via rejection sampling.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace posepick
