#pragma once

#include <cstdint>

namespace gmedian {

// SplitMix64 (Steele/Lea/Flood). The state advances by the 64-bit golden
// gamma 0x9e3779b97f4a7c15; each output is the state mixed with the
// constants 0xbf58476d1ce4e5b9 and 0x94d049bb133111eb. Used for seeding
// and for deriving independent substreams.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// xoshiro256** 1.0 (Blackman/Vigna). Output is rotl(s1 * 5, 7) * 9; the
// state transition is the fixed xor/shift/rotate network below. The four
// state words are filled from SplitMix64, so a single 64-bit seed fully
// determines the stream on every platform.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : state_) word = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1): the top 53 bits scaled by 2^-53.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by modulo reduction; bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

// k-th element of the SplitMix64 stream seeded at `seed`, computed in O(1).
// Family members and sweep instances use this to get independent substreams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  SplitMix64 sm(seed + k * 0x9e3779b97f4a7c15ULL);
  return sm.next();
}

}  // namespace gmedian
