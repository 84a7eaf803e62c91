#pragma once

#include <cstdint>
#include <random>

namespace bfly {

/// Seeded, platform-stable random source. The engine is std::mt19937_64,
/// whose output sequence is fixed by the standard; every derived quantity
/// (bounded integers, bits, uniform reals) is computed here rather than by
/// the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Independent stream for trial `index`; depends only on (seed, stream, index).
  Rng substream(std::uint64_t index) const;

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool fair_bit();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::uint64_t bit_buffer_ = 0;
  int bits_left_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace bfly
