#pragma once

#include <array>
#include <cstdint>

namespace majority {

/// Philox4x32 block function with the standard 10-round schedule.
///
/// Counter-based: the output block is a pure function of (counter, key), so
/// any block of any stream can be regenerated independently of the others.
/// Exposed for verification against the published known-answer vectors.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Deterministic random stream keyed by (seed, stream_id).
///
/// The 128-bit Philox counter is split into a 64-bit block index and the
/// 64-bit stream id, so distinct stream ids can never overlap regardless of
/// how many values are drawn. Two instances built from the same (seed,
/// stream_id) produce identical sequences on every platform.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream_id) noexcept
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_{static_cast<std::uint32_t>(stream_id),
                static_cast<std::uint32_t>(stream_id >> 32)} {}

  std::uint32_t next_u32() {
    if (pos_ == 4) refill();
    return block_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    return lo | (static_cast<std::uint64_t>(next_u32()) << 32);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Unbiased uniform integer in [0, bound); bound must be positive.
  std::uint32_t uniform_below(std::uint32_t bound);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> stream_;
  std::uint64_t block_index_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int pos_ = 4;
};

/// Stream factory. Identical (seed, stream_id) pairs yield identical
/// sequences; distinct stream_ids yield independent streams.
Rng make_rng(std::uint64_t seed, std::uint64_t stream_id);

}  // namespace majority
