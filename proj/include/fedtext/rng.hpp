#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fedtext {

// SplitMix64 finalizer, used to derive decorrelated seeds from one root seed.
constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr uint64_t mix_seed(uint64_t seed, uint64_t tag) {
  return splitmix64(seed ^ splitmix64(tag));
}

// Deterministic RNG. std::mt19937_64 output is fully specified by the
// standard; the helpers below avoid std::uniform_int_distribution and
// std::shuffle, whose mappings are implementation-defined, so identical seeds
// give identical streams on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // Unbiased integer in [0, n) via rejection sampling.
  uint64_t uniform_below(uint64_t n) {
    if (n <= 1) return 0;
    // 2^64 mod n, computed without 128-bit arithmetic
    const uint64_t rem = (UINT64_MAX % n + 1) % n;
    for (;;) {
      uint64_t v = engine_();
      if (rem == 0 || v < UINT64_MAX - rem + 1) return v % n;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Fisher-Yates shuffle driven by uniform_below.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fedtext
