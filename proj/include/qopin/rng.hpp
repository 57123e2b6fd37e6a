#pragma once

#include <cstdint>

namespace qopin {

// The single pseudo-random recurrence used anywhere in the project
// (splitmix64).  Every sampled suite derives its stream from one
// explicit 64-bit seed, so runs are reproducible bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return next() & 1u; }

  // Derive an independent stream; used to partition work deterministically.
  SplitMix64 fork() { return SplitMix64(next() ^ 0xA5A5A5A55A5A5A5Aull); }

 private:
  std::uint64_t state_;
};

}  // namespace qopin
