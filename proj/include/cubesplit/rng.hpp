#pragma once

#include <cstdint>

namespace cubesplit {

/// Splittable pseudo-random generator with explicit stream ids.
///
/// The internal state is a 64-bit hash of (seed, stream_id), advanced with
/// splitmix64 steps. A given (seed, stream_id) pair therefore yields the same
/// sample sequence on every platform, and any number of independent streams
/// can be opened from one seed (Monte Carlo code opens one stream per sample
/// index so results do not depend on thread scheduling).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id) {
    state_ = mix(seed) ^ mix(stream_id * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Next 64 pseudo-random bits (splitmix64).
  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform on the open interval (0,1) with 53-bit resolution; never
  /// returns 0 or 1, so inverse-CDF transforms stay finite.
  double next_double() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdull;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ull;
    z ^= z >> 33;
    return z;
  }

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_;
};

}  // namespace cubesplit
