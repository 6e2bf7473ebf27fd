#pragma once

#include <cstdint>
#include <vector>

namespace pclab {

// Deterministic 64-bit generator (splitmix64). Every randomized routine in
// the project takes one of these seeded explicitly; per-trial streams are
// derived as seed + trial index. No OS entropy, no libc distributions, so
// replays are byte-identical across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0. Rejection keeps it exactly uniform.
  uint64_t below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Bernoulli(p) via a 53-bit integer threshold; deterministic given p.
  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    const double two53 = 9007199254740992.0;
    uint64_t threshold = static_cast<uint64_t>(p * two53);
    return (next() >> 11) < threshold;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
};

}  // namespace pclab
