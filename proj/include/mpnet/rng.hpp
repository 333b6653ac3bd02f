#pragma once

#include <cstdint>

#include "mpnet/linalg.hpp"

namespace mpnet {

// Counter-based 64-bit generator (SplitMix64 finalizer over a Weyl
// sequence). Fully specified by the two constants below, so a given
// (seed, counter) pair yields the same bits on every platform:
//
//   state_k = seed + (k+1) * 0x9E3779B97F4A7C15
//   out_k   = mix(state_k)  with  mix(x): x ^= x>>30; x *= 0xBF58476D1CE4E5B9;
//                                          x ^= x>>27; x *= 0x94D049BB133111EB;
//                                          x ^= x>>31
//
// Streams are derived by hashing a stream id into the seed, which is how
// per-trial generators stay independent of worker scheduling.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed) {}

  static uint64_t mix(uint64_t x);

  // Independent child stream (e.g. one per trial index).
  Rng stream(uint64_t stream_id) const { return Rng(mix(seed_ ^ mix(stream_id + 0x632BE59BD9B4E019ULL))); }

  uint64_t next_u64() { return mix(seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Approximate standard normal as a sum of 12 uniforms minus 6. Uses only
  // additions, so the bits do not depend on the platform's libm. Adequate
  // for noise synthesis and parameter initialization; bounded to +-6.
  double normal();

  uint32_t next_below(uint32_t n) { return static_cast<uint32_t>(next_u64() % n); }

  Mat uniform_mat(int rows, int cols, double lo, double hi);
  Mat normal_mat(int rows, int cols);

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = next_u64() % i;
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

}  // namespace mpnet
