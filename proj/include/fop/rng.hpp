#pragma once

#include <cstdint>

namespace fop {

/// Default seed for every randomized check. Reports record the seed used so
/// runs are reproducible byte for byte.
inline constexpr std::uint64_t default_seed = 0x5eed0001u;

/// splitmix64. Self-contained so that sampled verdicts do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = default_seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform in [lo, hi] inclusive.
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// +1 or -1.
  int sign() { return (next() & 1) ? 1 : -1; }

 private:
  std::uint64_t state_;
};

}  // namespace fop
