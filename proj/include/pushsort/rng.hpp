#pragma once

// Deterministic, platform-independent random streams (splitmix64-based).
// std::uniform_*_distribution is implementation-defined, so every sample the
// simulator draws goes through this generator to keep runs byte-reproducible.

#include <cstdint>
#include <utility>
#include <vector>

namespace pushsort {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Order-sensitive combiner used for seed derivation: mix_seeds(a, b) != mix_seeds(b, a).
constexpr std::uint64_t mix_seeds(std::uint64_t a, std::uint64_t b) {
  return mix64(a + kGoldenGamma + mix64(b + kGoldenGamma));
}

class Rng {
 public:
  explicit constexpr Rng(std::uint64_t seed) : state_(seed) {}

  // Independent stream derived from this one; does not advance this stream.
  constexpr Rng split(std::uint64_t key) const { return Rng(mix_seeds(state_, key)); }

  constexpr std::uint64_t next_u64() {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  // [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Unbiased integer in [0, n), n >= 1 (Lemire's multiply-shift with rejection).
  std::uint64_t bounded(std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t threshold = -n % n;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

// Fisher-Yates with the deterministic generator above.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.bounded(i)]);
  }
}

}  // namespace pushsort
